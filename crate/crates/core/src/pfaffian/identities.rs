//! Checkers for the overlapping-Pfaffian formula and the Pfaffian lemmas
//! derived from it. Each checker evaluates both sides and compares them.

use std::fmt;
use std::str::FromStr;

use super::{word_sign, PfaffianError, SkewMatrix};
use crate::ring::Ring;
use crate::IndexSet;

/// Which form of the overlapping-Pfaffian formula to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Overlap {
    /// `P(ab) P(ag)` with two sums, over `beta` and over `gamma`.
    General,
    /// `beta` is the single letter `b`.
    BetaSingle,
    /// `gamma` is a single letter `c`.
    GammaSingle,
    /// `gamma` is empty.
    GammaEmpty,
    /// `alpha` and `gamma` are empty: the expansion of `P(beta)` along `b`.
    AlphaGammaEmpty,
}

fn check_letters(word: &[usize], name: &'static str, n: usize) -> Result<(), PfaffianError> {
    for (k, &a) in word.iter().enumerate() {
        if !(1..=n).contains(&a) {
            return Err(PfaffianError::LetterOutOfRange { letter: a, n });
        }
        if word[..k].contains(&a) {
            return Err(PfaffianError::RepeatedLetter { letter: a, word: name });
        }
    }
    Ok(())
}

fn check_disjoint(
    a: &[usize],
    an: &'static str,
    b: &[usize],
    bn: &'static str,
) -> Result<(), PfaffianError> {
    match a.iter().find(|x| b.contains(x)) {
        Some(&letter) => Err(PfaffianError::NotDisjoint {
            letter,
            first: an,
            second: bn,
        }),
        None => Ok(()),
    }
}

fn cat(parts: &[&[usize]]) -> Vec<usize> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

fn remove(word: &[usize], letters: &[usize]) -> Vec<usize> {
    word.iter().copied().filter(|a| !letters.contains(a)).collect()
}

/// The general overlapping-Pfaffian identity for disjoint words
/// `alpha`, `beta`, `gamma` and a letter `b` of `beta`.
pub fn check_overlapping<R: Ring>(
    t: &SkewMatrix<R>,
    alpha: &[usize],
    beta: &[usize],
    gamma: &[usize],
    b: usize,
) -> Result<bool, PfaffianError> {
    check_overlapping_form(t, Overlap::General, alpha, beta, gamma, b)
}

/// Evaluates one of the displayed forms of the overlapping-Pfaffian formula.
/// The reduced forms require the corresponding shape of the words.
pub fn check_overlapping_form<R: Ring>(
    t: &SkewMatrix<R>,
    form: Overlap,
    alpha: &[usize],
    beta: &[usize],
    gamma: &[usize],
    b: usize,
) -> Result<bool, PfaffianError> {
    let n = t.n();
    check_letters(alpha, "alpha", n)?;
    check_letters(beta, "beta", n)?;
    check_letters(gamma, "gamma", n)?;
    check_disjoint(alpha, "alpha", beta, "beta")?;
    check_disjoint(alpha, "alpha", gamma, "gamma")?;
    check_disjoint(beta, "beta", gamma, "gamma")?;
    if !beta.contains(&b) {
        return Err(PfaffianError::LetterNotInBeta { letter: b });
    }
    let shape = |ok: bool, what: &str| {
        if ok {
            Ok(())
        } else {
            Err(PfaffianError::Malformed(format!("{form:?} form requires {what}")))
        }
    };
    match form {
        Overlap::General => {}
        Overlap::BetaSingle => shape(beta == [b], "beta = b")?,
        Overlap::GammaSingle => shape(gamma.len() == 1, "gamma to be a single letter")?,
        Overlap::GammaEmpty => shape(gamma.is_empty(), "gamma empty")?,
        Overlap::AlphaGammaEmpty => shape(alpha.is_empty() && gamma.is_empty(), "alpha and gamma empty")?,
    }

    let r = t.ring();
    let p = |w: Vec<usize>| t.pfaffian_word(&w);
    let beta_sum = || {
        r.sum(beta.iter().map(|&i| {
            let rest = remove(beta, &[b, i]);
            let s = word_sign(beta, &cat(&[&[b, i], &rest]));
            if s == 0 {
                return r.zero();
            }
            r.signed(s, &r.mul(&p(cat(&[alpha, &rest])), &p(cat(&[alpha, gamma, &[b, i]]))))
        }))
    };
    let beta_minus_b = remove(beta, &[b]);
    let sb = word_sign(beta, &cat(&[&[b], &beta_minus_b]));

    let (lhs, rhs) = match form {
        Overlap::General => {
            let gamma_sum = r.sum(gamma.iter().map(|&j| {
                let rest = remove(gamma, &[j]);
                let s = sb * word_sign(gamma, &cat(&[&[j], &rest]));
                r.signed(
                    s,
                    &r.mul(&p(cat(&[alpha, &[j], &beta_minus_b])), &p(cat(&[alpha, &[b], &rest]))),
                )
            }));
            (
                r.mul(&p(cat(&[alpha, beta])), &p(cat(&[alpha, gamma]))),
                r.add(&beta_sum(), &gamma_sum),
            )
        }
        Overlap::BetaSingle => {
            let sum = r.sum(gamma.iter().map(|&j| {
                let rest = remove(gamma, &[j]);
                let s = word_sign(gamma, &cat(&[&[j], &rest]));
                r.signed(s, &r.mul(&p(cat(&[alpha, &[j]])), &p(cat(&[alpha, &[b], &rest]))))
            }));
            (r.mul(&p(cat(&[alpha, &[b]])), &p(cat(&[alpha, gamma]))), sum)
        }
        Overlap::GammaSingle => {
            let c = gamma[0];
            let extra = r.signed(
                sb,
                &r.mul(&p(cat(&[alpha, &[c], &beta_minus_b])), &p(cat(&[alpha, &[b]]))),
            );
            (
                r.mul(&p(cat(&[alpha, beta])), &p(cat(&[alpha, &[c]]))),
                r.add(&beta_sum(), &extra),
            )
        }
        Overlap::GammaEmpty => (r.mul(&p(cat(&[alpha, beta])), &p(alpha.to_vec())), beta_sum()),
        Overlap::AlphaGammaEmpty => (p(beta.to_vec()), beta_sum()),
    };
    Ok(lhs == rhs)
}

/// The Pfaffian lemmas, named by what they express.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LemmaId {
    /// Expansion of `pf(u)` along the letter `u_l`.
    Laplace,
    /// The expansion along `u_l` with row `u_l` repeated vanishes: the two
    /// one-sided sums of `t * pf(u minus u_i)` agree.
    LaplaceVanishing,
    /// `Pf(T) * pfbar(u)` expanded through complementary Pfaffians of pairs.
    FullTimesComplement,
    /// Balance of `pfbar(u minus u_i) * pfbar(u_i u_l)` on both sides of `l`.
    PairedComplements,
    /// The alternating sum of `pfbar(u_i) * pfbar(u minus u_i)` vanishes.
    SingletonComplements,
    /// Six letters, odd products: `pfbar(1) pfbar(5)` against `pfbar(3) pfbar(3)`.
    SixLetterOdd,
    /// Six letters, even products: `pfbar(2) pfbar(4)` on both sides.
    SixLetterEven,
    /// Five letters `u < x < y`, `v < w < x`: `pfbar(3) pfbar(3)` against `pfbar(1) pfbar(5)`.
    FiveLetterOdd,
}

impl LemmaId {
    pub const ALL: [LemmaId; 8] = [
        LemmaId::Laplace,
        LemmaId::LaplaceVanishing,
        LemmaId::FullTimesComplement,
        LemmaId::PairedComplements,
        LemmaId::SingletonComplements,
        LemmaId::SixLetterOdd,
        LemmaId::SixLetterEven,
        LemmaId::FiveLetterOdd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::Laplace => "laplace",
            LemmaId::LaplaceVanishing => "laplace-vanishing",
            LemmaId::FullTimesComplement => "full-times-complement",
            LemmaId::PairedComplements => "paired-complements",
            LemmaId::SingletonComplements => "singleton-complements",
            LemmaId::SixLetterOdd => "six-letter-odd",
            LemmaId::SixLetterEven => "six-letter-even",
            LemmaId::FiveLetterOdd => "five-letter-odd",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LemmaId {
    type Err = PfaffianError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LemmaId::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| PfaffianError::Malformed(format!("unknown lemma {s:?}")))
    }
}

/// Index data for one instance of a lemma.
///
/// For the sequence lemmas `u` is `u_1 < ... < u_k` and `ell` is the
/// distinguished position (1-based; ignored by `SingletonComplements`). For
/// the six-letter lemmas `u = (u, v, w, x, y, z)`; for `FiveLetterOdd`
/// `u = (u, v, w, x, y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaCase {
    pub id: LemmaId,
    pub u: Vec<usize>,
    pub ell: usize,
}

impl fmt::Display for LemmaCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.u.iter().map(|a| a.to_string()).collect();
        write!(f, "{} u=({})", self.id, letters.join(","))?;
        if matches!(
            self.id,
            LemmaId::Laplace | LemmaId::LaplaceVanishing | LemmaId::FullTimesComplement | LemmaId::PairedComplements
        ) {
            write!(f, " l={}", self.ell)?;
        }
        Ok(())
    }
}

fn malformed(msg: impl Into<String>) -> PfaffianError {
    PfaffianError::Malformed(msg.into())
}

fn validate(case: &LemmaCase, n: usize) -> Result<(), PfaffianError> {
    let u = &case.u;
    if let Some(&a) = u.iter().find(|&&a| a < 1 || a > n) {
        return Err(malformed(format!("letter {a} violates 1 <= letter <= {n}")));
    }
    let increasing = |w: &[usize], what: &str| {
        if w.windows(2).all(|p| p[0] < p[1]) {
            Ok(())
        } else {
            Err(malformed(format!("{what} must be strictly increasing")))
        }
    };
    let k = u.len();
    match case.id {
        LemmaId::Laplace | LemmaId::LaplaceVanishing | LemmaId::FullTimesComplement => {
            increasing(u, "u_1 < ... < u_k")?;
            if k == 0 || case.ell < 1 || case.ell > k {
                return Err(malformed(format!("l = {} violates 1 <= l <= k = {k}", case.ell)));
            }
        }
        LemmaId::PairedComplements => {
            increasing(u, "u_1 < ... < u_k")?;
            if k < 2 || case.ell < 1 || case.ell > k - 1 {
                return Err(malformed(format!("l = {} violates 1 <= l <= k - 1 = {}", case.ell, k.saturating_sub(1))));
            }
        }
        LemmaId::SingletonComplements => {
            increasing(u, "u_1 < ... < u_k")?;
            if k == 0 {
                return Err(malformed("k >= 1 required"));
            }
        }
        LemmaId::SixLetterOdd | LemmaId::SixLetterEven => {
            if k != 6 {
                return Err(malformed("six letters u < v < w < x < y < z required"));
            }
            increasing(u, "u < v < w < x < y < z")?;
        }
        LemmaId::FiveLetterOdd => {
            if k != 5 {
                return Err(malformed("five letters (u, v, w, x, y) required"));
            }
            let (uu, v, w, x, y) = (u[0], u[1], u[2], u[3], u[4]);
            increasing(&[uu, x, y], "u < x < y")?;
            increasing(&[v, w, x], "v < w < x")?;
            if uu == v || uu == w {
                return Err(malformed("u must differ from v and w"));
            }
        }
    }
    Ok(())
}

/// Checks one instance of a Pfaffian lemma over `t`.
pub fn check_lemma<R: Ring>(t: &SkewMatrix<R>, case: &LemmaCase) -> Result<bool, PfaffianError> {
    validate(case, t.n())?;
    let r = t.ring();
    let u = &case.u;
    let k = u.len();
    let set = |xs: &[usize]| -> IndexSet { xs.iter().copied().collect() };
    let pf = |xs: &[usize]| t.sub_pfaffian(set(xs));
    let pfbar = |xs: &[usize]| t.comp_pfaffian(set(xs));
    let without = |drop: &[usize]| remove(u, drop);
    let alt = |i: usize, x: R::Elem| if i % 2 == 0 { x } else { r.neg(&x) };
    let l = case.ell;

    let (lhs, rhs) = match case.id {
        LemmaId::Laplace => {
            let ul = u[l - 1];
            let rhs = r.sum((1..=k).filter(|&i| i != l).map(|i| {
                let ui = u[i - 1];
                let entry = if i < l { t.entry(ui, ul) } else { t.entry(ul, ui) };
                alt(i, r.mul(entry, &pf(&without(&[ui, ul]))))
            }));
            (alt(l - 1, pf(u)), rhs)
        }
        LemmaId::LaplaceVanishing => {
            let ul = u[l - 1];
            let side = |range: Vec<usize>| {
                r.sum(range.into_iter().map(|i| {
                    let ui = u[i - 1];
                    let entry = if i < l { t.entry(ui, ul) } else { t.entry(ul, ui) };
                    alt(i, r.mul(entry, &pf(&without(&[ui]))))
                }))
            };
            (side((1..l).collect()), side((l + 1..=k).collect()))
        }
        LemmaId::FullTimesComplement => {
            let ul = u[l - 1];
            let rhs = r.sum((1..=k).filter(|&i| i != l).map(|i| {
                let ui = u[i - 1];
                alt(i, r.mul(&pfbar(&[ui, ul]), &pfbar(&without(&[ui, ul]))))
            }));
            (alt(l - 1, r.mul(&t.pfaffian(), &pfbar(u))), rhs)
        }
        LemmaId::PairedComplements => {
            let ul = u[l - 1];
            let side = |range: Vec<usize>| {
                r.sum(range.into_iter().map(|i| {
                    let ui = u[i - 1];
                    alt(i, r.mul(&pfbar(&without(&[ui])), &pfbar(&[ui, ul])))
                }))
            };
            (side((1..l).collect()), side((l + 1..=k).collect()))
        }
        LemmaId::SingletonComplements => {
            let lhs = r.sum((1..=k).map(|i| {
                let ui = u[i - 1];
                alt(i, r.mul(&pfbar(&[ui]), &pfbar(&without(&[ui]))))
            }));
            (lhs, r.zero())
        }
        LemmaId::SixLetterOdd => {
            let [a, v, w, x, y, z] = [u[0], u[1], u[2], u[3], u[4], u[5]];
            let pp = |p: &[usize], q: &[usize]| r.mul(&pfbar(p), &pfbar(q));
            let lhs = r.sub(&pp(&[y], &[a, v, w, x, z]), &pp(&[z], &[a, v, w, x, y]));
            let rhs = r.sum([
                pp(&[a, y, z], &[v, w, x]),
                r.neg(&pp(&[v, y, z], &[a, w, x])),
                pp(&[w, y, z], &[a, v, x]),
                r.neg(&pp(&[x, y, z], &[a, v, w])),
            ]);
            (lhs, rhs)
        }
        LemmaId::SixLetterEven => {
            let [a, v, w, x, y, z] = [u[0], u[1], u[2], u[3], u[4], u[5]];
            let pp = |p: &[usize], q: &[usize]| r.mul(&pfbar(p), &pfbar(q));
            let lhs = r.sum([
                pp(&[x, y], &[a, v, w, z]),
                r.neg(&pp(&[x, z], &[a, v, w, y])),
                pp(&[y, z], &[a, v, w, x]),
            ]);
            let rhs = r.sum([
                pp(&[a, v], &[w, x, y, z]),
                r.neg(&pp(&[a, w], &[v, x, y, z])),
                pp(&[v, w], &[a, x, y, z]),
            ]);
            (lhs, rhs)
        }
        LemmaId::FiveLetterOdd => {
            let [a, v, w, x, y] = [u[0], u[1], u[2], u[3], u[4]];
            let pp = |p: &[usize], q: &[usize]| r.mul(&pfbar(p), &pfbar(q));
            let lhs = r.sub(&pp(&[a, x, y], &[a, v, w]), &pp(&[a], &[a, v, w, x, y]));
            let rhs = r.sub(&pp(&[a, v, x], &[a, w, y]), &pp(&[a, w, x], &[a, v, y]));
            (lhs, rhs)
        }
    };
    Ok(lhs == rhs)
}

/// Every admissible instance of `id` for matrices of size `n`.
pub fn admissible_cases(id: LemmaId, n: usize) -> Vec<LemmaCase> {
    let mut out = Vec::new();
    let case = |u: Vec<usize>, ell: usize| LemmaCase { id, u, ell };
    match id {
        LemmaId::Laplace | LemmaId::LaplaceVanishing | LemmaId::FullTimesComplement | LemmaId::PairedComplements => {
            let top_shift = usize::from(id == LemmaId::PairedComplements);
            for s in IndexSet::full(n).subsets() {
                let u = s.to_vec();
                for ell in 1..=u.len().saturating_sub(top_shift) {
                    out.push(case(u.clone(), ell));
                }
            }
        }
        LemmaId::SingletonComplements => {
            for s in IndexSet::full(n).subsets().filter(|s| !s.is_empty()) {
                out.push(case(s.to_vec(), 0));
            }
        }
        LemmaId::SixLetterOdd | LemmaId::SixLetterEven => {
            for s in IndexSet::k_subsets(n, 6) {
                out.push(case(s.to_vec(), 0));
            }
        }
        LemmaId::FiveLetterOdd => {
            for s in IndexSet::k_subsets(n, 5) {
                let letters = s.to_vec();
                for (pos_u, &u) in letters.iter().enumerate() {
                    let rest: Vec<usize> = letters
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != pos_u)
                        .map(|(_, &a)| a)
                        .collect();
                    // rest = v < w < x < y once u is removed; require u < x.
                    let (v, w, x, y) = (rest[0], rest[1], rest[2], rest[3]);
                    if u < x {
                        out.push(case(vec![u, v, w, x, y], 0));
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| (a.u.len(), &a.u, a.ell).cmp(&(b.u.len(), &b.u, b.ell)));
    out
}

/// One instance of the overlapping formula: `(alpha, beta, gamma, b)`.
pub type OverlapCase = (Vec<usize>, Vec<usize>, Vec<usize>, usize);

/// Every way to place the letters `1..=n` into sorted words `alpha`, `beta`,
/// `gamma` (or leave them out), with `beta` nonempty, and every `b` in `beta`.
pub fn overlapping_cases(n: usize) -> Vec<OverlapCase> {
    let mut out = Vec::new();
    for code in 0..4usize.pow(n as u32) {
        let mut words: [Vec<usize>; 4] = Default::default();
        let mut c = code;
        for letter in 1..=n {
            words[c % 4].push(letter);
            c /= 4;
        }
        let [_, alpha, beta, gamma] = words;
        for &b in &beta {
            out.push((alpha.clone(), beta.clone(), gamma.clone(), b));
        }
    }
    out
}
