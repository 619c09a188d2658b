use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{check_range, weyl_action, SchubertError};
use crate::pfaffian::SkewMatrix;
use crate::polyring::Polynomial;
use crate::resolution::{build, Variant};
use crate::{IndexSet, Parity};

/// The two Schubert varieties of codimension three. `WPrime` has the
/// Gorenstein ideal (`n` generators), `WDoublePrime` the almost complete
/// intersection (four generators).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealKind {
    WPrime,
    WDoublePrime,
}

impl IdealKind {
    pub const ALL: [IdealKind; 2] = [IdealKind::WPrime, IdealKind::WDoublePrime];

    pub fn name(self) -> &'static str {
        match self {
            IdealKind::WPrime => "w-prime",
            IdealKind::WDoublePrime => "w-double-prime",
        }
    }

    /// The coset words of the generators, letters written left to right.
    pub fn words(self, n: usize) -> Vec<Vec<usize>> {
        let tail = |k: usize| -> Vec<usize> { (n - k..n).collect() };
        match self {
            IdealKind::WPrime => (0..n).map(tail).collect(),
            IdealKind::WDoublePrime => vec![vec![], vec![n - 1], vec![n - 2, n - 1], vec![n, n - 2, n - 1]],
        }
    }
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdealKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "w-prime" | "w'" => Ok(IdealKind::WPrime),
            "w-double-prime" | "w''" => Ok(IdealKind::WDoublePrime),
            _ => Err(format!("unknown ideal {s:?}, expected w-prime or w-double-prime")),
        }
    }
}

fn word_name(word: &[usize]) -> String {
    if word.is_empty() {
        "id".to_string()
    } else {
        word.iter().map(|i| format!("s{i}")).collect()
    }
}

/// The subset indexing `q_w`: the word acts, rightmost letter first, on
/// `{n}` for odd `n` and on the empty set for even `n`. For even `n` the
/// letters `s_{n-1}` and `s_n` act as `s_n` and `s_{n-1}` respectively.
pub fn coset_subset(n: usize, word: &[usize]) -> Result<IndexSet, SchubertError> {
    let parity = Parity::of(n);
    let mut set = match parity {
        Parity::Odd => IndexSet::singleton(n),
        Parity::Even => IndexSet::EMPTY,
    };
    for &letter in word.iter().rev() {
        let i = match parity {
            Parity::Even if letter == n - 1 => n,
            Parity::Even if letter == n => n - 1,
            _ => letter,
        };
        set = weyl_action(n, i, set)?;
    }
    Ok(set)
}

fn removed_indices(n: usize, set: IndexSet) -> IndexSet {
    set.iter().map(|i| n + 1 - i).collect()
}

/// The restriction of `q_I` to the big cell: the Pfaffian of `X` with the
/// rows and columns `n + 1 - i`, `i` in `I`, removed.
pub fn spinor_to_pfaffian(set: IndexSet, x: &SkewMatrix) -> Result<Polynomial, SchubertError> {
    let n = x.n();
    let class = Parity::of(n);
    let parity_ok = (set.len() % 2 == 1) == (class == Parity::Odd);
    if set.max().is_some_and(|m| m > n) || !parity_ok {
        return Err(SchubertError::NotInPoset { set, n, class });
    }
    Ok(x.comp_pfaffian(removed_indices(n, set)))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SchubertGenerator {
    pub word: Vec<usize>,
    pub subset: IndexSet,
    /// Rows and columns of `X` removed to form the Pfaffian.
    pub removed: IndexSet,
    pub pfaffian: Polynomial,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SchubertIdeal {
    pub n: usize,
    pub kind: IdealKind,
    pub generators: Vec<SchubertGenerator>,
    /// 1-based positions of generators lying in the ideal of the others.
    pub redundant: Vec<usize>,
}

impl SchubertIdeal {
    pub fn to_json(&self) -> serde_json::Value {
        let generators: Vec<serde_json::Value> = self
            .generators
            .iter()
            .map(|g| {
                serde_json::json!({
                    "word": word_name(&g.word),
                    "subset": g.subset.to_vec(),
                    "removed": g.removed.to_vec(),
                    "pfaffian": g.pfaffian.to_string(),
                })
            })
            .collect();
        serde_json::json!({
            "n": self.n,
            "ideal": self.kind,
            "generators": generators,
            "redundant": self.redundant,
        })
    }
}

/// The generators of the Schubert ideal, identified with Pfaffians of `x`.
pub fn schubert_ideal(n: usize, kind: IdealKind, x: &SkewMatrix) -> Result<SchubertIdeal, SchubertError> {
    check_range(n, 5, 64)?;
    if x.n() != n {
        return Err(SchubertError::MatrixSize {
            expected: n,
            found: x.n(),
        });
    }
    let generators = kind
        .words(n)
        .into_iter()
        .map(|word| {
            let subset = coset_subset(n, &word)?;
            Ok(SchubertGenerator {
                pfaffian: spinor_to_pfaffian(subset, x)?,
                removed: removed_indices(n, subset),
                subset,
                word,
            })
        })
        .collect::<Result<Vec<_>, SchubertError>>()?;
    let redundant = if kind == IdealKind::WPrime && Parity::of(n) == Parity::Even {
        vec![1]
    } else {
        Vec::new()
    };
    Ok(SchubertIdeal {
        n,
        kind,
        generators,
        redundant,
    })
}

pub fn schubert_ideal_generators(n: usize, kind: IdealKind, x: &SkewMatrix) -> Result<Vec<Polynomial>, SchubertError> {
    Ok(schubert_ideal(n, kind, x)?.generators.into_iter().map(|g| g.pfaffian).collect())
}

/// Matches the four-generator ideal against the first differential of the
/// generic resolution of size `n`: entry `k` is `(position, sign)` with
/// `generator_k = sign * d1[position]`.
pub fn generator_signs(n: usize) -> Result<Vec<(usize, i32)>, SchubertError> {
    let parity = Parity::of(n);
    check_range(n, parity.min_size(), 64)?;
    let c = build(n, parity, Variant::Generic).expect("size already checked");
    let d1 = c.generators();
    schubert_ideal_generators(n, IdealKind::WDoublePrime, &c.matrix)?
        .into_iter()
        .map(|g| {
            d1.iter()
                .enumerate()
                .find_map(|(k, e)| {
                    if *e == g {
                        Some((k + 1, 1))
                    } else if *e == -g.clone() {
                        Some((k + 1, -1))
                    } else {
                        None
                    }
                })
                .ok_or(SchubertError::Unmatched(g))
        })
        .collect()
}
