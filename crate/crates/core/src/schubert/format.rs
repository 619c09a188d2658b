use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::ideals::{coset_subset, IdealKind};
use super::{check_range, SchubertError};
use crate::Parity;

/// Shape of a graded free resolution `0 -> F3 -> F2 -> F1 -> F0`: for each
/// homological degree the summands `R^rank(-twist)`, merged and sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct GradedFormat {
    pub modules: [Vec<(usize, i64)>; 4],
}

impl GradedFormat {
    pub fn new(modules: [Vec<(usize, i64)>; 4]) -> Self {
        let mut f = GradedFormat::default();
        for (d, summands) in modules.into_iter().enumerate() {
            for (rank, twist) in summands {
                f.add(d, rank, twist);
            }
        }
        f
    }

    fn add(&mut self, degree: usize, rank: usize, twist: i64) {
        if rank == 0 {
            return;
        }
        let list = &mut self.modules[degree];
        match list.iter_mut().find(|(_, t)| *t == twist) {
            Some(entry) => entry.0 += rank,
            None => {
                list.push((rank, twist));
                list.sort_by_key(|&(_, t)| t);
            }
        }
    }

    pub fn ranks(&self) -> [usize; 4] {
        let mut out = [0; 4];
        for (d, list) in self.modules.iter().enumerate() {
            out[d] = list.iter().map(|(r, _)| r).sum();
        }
        out
    }

    /// Twists of the summands of `F_degree`, one per basis element.
    pub fn twists(&self, degree: usize) -> Vec<i64> {
        self.modules[degree].iter().flat_map(|&(r, t)| std::iter::repeat_n(t, r)).collect()
    }

    /// `Hom(-, R(-shift))` with homological degrees reversed.
    fn dual(&self, shift: i64) -> GradedFormat {
        let mut out = GradedFormat::default();
        for d in 0..4 {
            for &(r, t) in &self.modules[d] {
                out.add(3 - d, r, shift - t);
            }
        }
        out
    }

    /// The minimal resolution of a grade-three Gorenstein ideal generated by
    /// the `2k` Pfaffians of a `(2k+1) x (2k+1)` generic skew matrix.
    pub fn gorenstein(k: usize) -> GradedFormat {
        let (rank, k) = (2 * k + 1, k as i64);
        GradedFormat::new([vec![(1, 0)], vec![(rank, k)], vec![(rank, k + 1)], vec![(1, 2 * k + 1)]])
    }

    /// The Koszul complex on three elements of the given degrees.
    pub fn koszul(degrees: [i64; 3]) -> GradedFormat {
        let [a, b, c] = degrees;
        GradedFormat::new([
            vec![(1, 0)],
            vec![(1, a), (1, b), (1, c)],
            vec![(1, a + b), (1, a + c), (1, b + c)],
            vec![(1, a + b + c)],
        ])
    }
}

impl fmt::Display for GradedFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let module = |list: &[(usize, i64)]| -> String {
            list.iter()
                .map(|&(r, t)| {
                    let base = if r == 1 { "R".to_string() } else { format!("R^{r}") };
                    if t == 0 {
                        base
                    } else {
                        format!("{base}({})", -t)
                    }
                })
                .collect::<Vec<_>>()
                .join(" + ")
        };
        write!(f, "0")?;
        for d in (0..4).rev() {
            write!(f, " -> {}", module(&self.modules[d]))?;
        }
        Ok(())
    }
}

/// The linkage computation: the Gorenstein ideal of the first Schubert
/// ideal is linked to the almost complete intersection by the regular
/// sequence of the first three spinor coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MappingCone {
    pub n: usize,
    pub gorenstein: GradedFormat,
    pub sequence_degrees: [i64; 3],
    pub koszul: GradedFormat,
    /// Summands `(homological degree, rank, twist)` cancelled against the
    /// next degree to reach the minimal format.
    pub cancelled: Vec<(usize, usize, i64)>,
    pub aci: GradedFormat,
}

/// Builds the dual mapping cone of the comparison map from the Koszul
/// complex to the Gorenstein resolution and cancels the unit components:
/// the top degree and every linking element that is a minimal generator of
/// the Gorenstein ideal (equal twists in `K_1` and `G_1`).
pub fn mapping_cone(n: usize) -> Result<MappingCone, SchubertError> {
    check_range(n, 5, 64)?;
    let parity = Parity::of(n);
    // The Gorenstein ideal: submaximal Pfaffians of X (odd n) or of
    // X[1;1] with the first row and column removed (even n).
    let k = match parity {
        Parity::Odd => (n - 1) / 2,
        Parity::Even => (n - 2) / 2,
    };
    let gorenstein = GradedFormat::gorenstein(k);

    let mut sequence_degrees = [0i64; 3];
    for (slot, word) in sequence_degrees.iter_mut().zip(IdealKind::WDoublePrime.words(n)) {
        let subset = coset_subset(n, &word)?;
        *slot = ((n - subset.len()) / 2) as i64;
    }
    let koszul = GradedFormat::koszul(sequence_degrees);
    let shift: i64 = sequence_degrees.iter().sum();

    let k_dual = koszul.dual(shift);
    let g_dual = gorenstein.dual(shift);
    // Cone in degrees 0..=4: F_i = K*_{3-i} (+) G*_{4-i}, both already
    // reindexed by `dual`, so F_i = k_dual_i (+) g_dual_{i-1}.
    let mut cone: [BTreeMap<i64, usize>; 5] = Default::default();
    let mut k_part: [BTreeMap<i64, usize>; 5] = Default::default();
    for d in 0..4 {
        for &(r, t) in &k_dual.modules[d] {
            *cone[d].entry(t).or_default() += r;
            *k_part[d].entry(t).or_default() += r;
        }
        for &(r, t) in &g_dual.modules[d] {
            *cone[d + 1].entry(t).or_default() += r;
        }
    }

    let mut cancelled = Vec::new();
    // G*_0 in degree 4 against K*_0 in degree 3: the comparison map is the
    // identity in homological degree zero.
    let top: Vec<(i64, usize)> = cone[4].iter().map(|(t, r)| (*t, *r)).collect();
    for (t, r) in top {
        let c = r.min(k_part[3].get(&t).copied().unwrap_or(0));
        if c > 0 {
            cancelled.push((4, c, t));
            *cone[4].get_mut(&t).unwrap() -= c;
            *cone[3].get_mut(&t).unwrap() -= c;
        }
    }
    // G*_1 in degree 3 against K*_1 in degree 2.
    let g1: Vec<(i64, usize)> = g_dual.modules[2].iter().map(|&(r, t)| (t, r)).collect();
    for (t, r) in g1 {
        let c = r.min(k_part[2].get(&t).copied().unwrap_or(0));
        if c > 0 {
            cancelled.push((3, c, t));
            *cone[3].get_mut(&t).unwrap() -= c;
            *cone[2].get_mut(&t).unwrap() -= c;
        }
    }
    assert!(cone[4].values().all(|&r| r == 0), "the cone has length three after cancellation");

    let mut aci = GradedFormat::default();
    for d in 0..4 {
        for (&t, &r) in &cone[d] {
            aci.add(d, r, t);
        }
    }
    Ok(MappingCone {
        n,
        gorenstein,
        sequence_degrees,
        koszul,
        cancelled,
        aci,
    })
}

/// `(gorenstein, aci)` formats for size `n`.
pub fn mapping_cone_format(n: usize) -> Result<(GradedFormat, GradedFormat), SchubertError> {
    let c = mapping_cone(n)?;
    Ok((c.gorenstein, c.aci))
}
