//! Verification suites: each runs a family of checks over a list of sizes
//! and collects one outcome per (size, context, identity), in canonical
//! order.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::brill::{brill_minor, complementary_minor, d3_minor_formula, det_oracle};
use crate::equivariant::{bidegree_check, equivariant_differentials, substitution_check};
use crate::pfaffian::{admissible_cases, check_lemma, check_overlapping, overlapping_cases};
use crate::resolution::{
    check_change_of_basis, check_column_independence, check_complex, check_dg_products, check_ideal_equality,
    check_minor_product, check_regseq_expansions, check_square_minors, from_matrix, minor_product_signs, rank_vote,
    Ranks,
};
use crate::schubert::{generator_signs, mapping_cone, weyl_action, SubsetPoset};
use crate::{build, generic_skew, zero_block_skew, IndexSet, LemmaId, Parity, Polynomial, PrimeField, SkewMatrix, Variant};

pub const DEFAULT_PRIME: u64 = 32003;
pub const DEFAULT_VOTES: usize = 5;
pub const DEFAULT_SEED: u64 = 0;

/// Random trials per size in the mod-p Brill check.
pub const BRILL_TRIALS: usize = 1000;
/// Largest size at which minors are compared symbolically.
pub const BRILL_SYMBOLIC_MAX: usize = 7;
/// Largest minor size in the symbolic Brill check.
pub const BRILL_MINOR_MAX: usize = 4;
/// Largest size for the cubic poset-axiom check.
pub const ORDER_AXIOMS_MAX: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    AppendixA,
    Brill,
    Complex,
    MinorProduct,
    IdealEquality,
    ChangeOfBasis,
    DgProducts,
    Regseq,
    Equivariant,
    Schubert,
    All,
}

impl Suite {
    /// Every suite except `All`, in run order.
    pub const CONCRETE: [Suite; 10] = [
        Suite::AppendixA,
        Suite::Brill,
        Suite::Complex,
        Suite::MinorProduct,
        Suite::IdealEquality,
        Suite::ChangeOfBasis,
        Suite::DgProducts,
        Suite::Regseq,
        Suite::Equivariant,
        Suite::Schubert,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::AppendixA => "appendix-a",
            Suite::Brill => "brill",
            Suite::Complex => "complex",
            Suite::MinorProduct => "minor-product",
            Suite::IdealEquality => "ideal-equality",
            Suite::ChangeOfBasis => "change-of-basis",
            Suite::DgProducts => "dg-products",
            Suite::Regseq => "regseq",
            Suite::Equivariant => "equivariant",
            Suite::Schubert => "schubert",
            Suite::All => "all",
        }
    }

    /// The sizes a suite accepts.
    pub fn size_range(self) -> (usize, usize) {
        match self {
            Suite::AppendixA => (1, 8),
            Suite::Brill => (1, 12),
            Suite::Equivariant => (5, 10),
            Suite::Schubert => (1, crate::schubert::MAX_POSET_SIZE),
            Suite::All => (1, 12),
            _ => (5, 12),
        }
    }

    pub fn accepts(self, n: usize) -> bool {
        let (lo, hi) = self.size_range();
        (lo..=hi).contains(&n)
    }

    pub fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::CONCRETE.to_vec(),
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::CONCRETE
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyOptions {
    pub sizes: Vec<usize>,
    pub seed: u64,
    pub prime: u64,
    pub votes: usize,
    /// Run the minor-product suite at an integer point instead of symbolically.
    pub specialize: bool,
}

impl VerifyOptions {
    pub fn new(sizes: Vec<usize>) -> Self {
        VerifyOptions {
            sizes,
            seed: DEFAULT_SEED,
            prime: DEFAULT_PRIME,
            votes: DEFAULT_VOTES,
            specialize: false,
        }
    }
}

/// One checked identity over a family of cases; `failure` locates the first
/// case that did not hold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub suite: Suite,
    pub n: usize,
    pub context: String,
    pub identity: String,
    pub cases: usize,
    pub failure: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    fn sort_key(&self) -> (Suite, usize, &str, &str) {
        (self.suite, self.n, &self.context, &self.identity)
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} n={} {} {} ({} cases)",
            self.suite, self.n, self.context, self.identity, self.cases
        )?;
        if let Some(why) = &self.failure {
            write!(f, ": {why}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub options: VerifyOptions,
    pub checks: Vec<CheckOutcome>,
    /// `(suite, n)` pairs outside a suite's range, skipped under `all`.
    pub skipped: Vec<(Suite, usize)>,
    #[serde(skip)]
    pub duration: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn total_cases(&self) -> usize {
        self.checks.iter().map(|c| c.cases).sum()
    }

    /// Deterministic text form: one line per check and a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&c.to_string());
            out.push('\n');
        }
        for (s, n) in &self.skipped {
            out.push_str(&format!("SKIP {s} n={n}\n"));
        }
        let failed = self.failures().count();
        out.push_str(&format!(
            "{} {}: {} checks, {} cases, {} failed (seed {}, prime {})\n",
            if failed == 0 { "OK" } else { "FAILED" },
            self.suite,
            self.checks.len(),
            self.total_cases(),
            failed,
            self.options.seed,
            self.options.prime
        ));
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v["passed"] = serde_json::Value::Bool(self.passed());
        v
    }
}

/// The sizes of `sizes` that a suite does not accept.
pub fn rejected_sizes(suite: Suite, sizes: &[usize]) -> Vec<usize> {
    sizes.iter().copied().filter(|&n| !suite.accepts(n)).collect()
}

/// Runs a suite. Under `all`, sizes outside a part's range are skipped;
/// a concrete suite given such a size reports it as a failed check.
pub fn run(suite: Suite, options: &VerifyOptions) -> VerificationReport {
    let start = Instant::now();
    let mut sizes = options.sizes.clone();
    sizes.sort_unstable();
    sizes.dedup();
    let mut jobs = Vec::new();
    let mut skipped = Vec::new();
    for part in suite.parts() {
        for &n in &sizes {
            if part.accepts(n) {
                jobs.push((part, n));
            } else if suite == Suite::All {
                skipped.push((part, n));
            } else {
                jobs.push((part, n));
            }
        }
    }
    let mut checks: Vec<CheckOutcome> = jobs
        .into_par_iter()
        .flat_map_iter(|(part, n)| run_one(part, n, options))
        .collect();
    checks.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    VerificationReport {
        suite,
        options: options.clone(),
        checks,
        skipped,
        duration: start.elapsed(),
    }
}

struct Collector {
    suite: Suite,
    n: usize,
    out: Vec<CheckOutcome>,
}

impl Collector {
    fn push(&mut self, context: impl Into<String>, identity: impl Into<String>, cases: usize, failure: Option<String>) {
        self.out.push(CheckOutcome {
            suite: self.suite,
            n: self.n,
            context: context.into(),
            identity: identity.into(),
            cases,
            failure,
        });
    }

    fn result<E: fmt::Display>(&mut self, context: impl Into<String>, identity: impl Into<String>, r: Result<(), E>) {
        self.push(context, identity, 1, r.err().map(|e| e.to_string()));
    }
}

fn run_one(suite: Suite, n: usize, o: &VerifyOptions) -> Vec<CheckOutcome> {
    let mut c = Collector {
        suite,
        n,
        out: Vec::new(),
    };
    if !suite.accepts(n) {
        let (lo, hi) = suite.size_range();
        c.push("-", "size", 0, Some(format!("n = {n} is outside {lo}..={hi}")));
        return c.out;
    }
    let parity = Parity::of(n);
    match suite {
        Suite::AppendixA => appendix_a(&mut c),
        Suite::Brill => brill(&mut c, o),
        Suite::Complex => complex(&mut c, o),
        Suite::MinorProduct => minor_product(&mut c, o),
        Suite::IdealEquality => {
            c.result(parity.name(), "ideal-equality", check_ideal_equality(n, parity));
            c.result(parity.name(), "square-minors", check_square_minors(n, parity));
        }
        Suite::ChangeOfBasis => c.result(parity.name(), "change-of-basis", check_change_of_basis(n, parity)),
        Suite::DgProducts => c.result(parity.name(), "dg-products", check_dg_products(n, parity)),
        Suite::Regseq => c.result(parity.name(), "regseq-expansions", check_regseq_expansions(n, parity)),
        Suite::Equivariant => equivariant(&mut c),
        Suite::Schubert => schubert(&mut c),
        Suite::All => unreachable!("expanded by run"),
    }
    c.out
}

fn matrices(n: usize) -> Vec<(&'static str, SkewMatrix)> {
    let mut out = vec![("generic", generic_skew(n))];
    if n >= 4 {
        out.push(("zero-block", zero_block_skew(n).expect("n >= 4")));
    }
    out
}

fn appendix_a(c: &mut Collector) {
    let n = c.n;
    for (name, m) in matrices(n) {
        let cases = overlapping_cases(n);
        let failure = cases.iter().find_map(|(a, b, g, l)| match check_overlapping(&m, a, b, g, *l) {
            Ok(true) => None,
            Ok(false) => Some(format!("alpha={a:?} beta={b:?} gamma={g:?} b={l}")),
            Err(e) => Some(e.to_string()),
        });
        c.push(name, "overlapping", cases.len(), failure);
        for id in LemmaId::ALL {
            let cases = admissible_cases(id, n);
            let failure = cases.iter().find_map(|case| match check_lemma(&m, case) {
                Ok(true) => None,
                Ok(false) => Some(case.to_string()),
                Err(e) => Some(format!("{case}: {e}")),
            });
            c.push(name, id.name(), cases.len(), failure);
        }
    }
}

fn random_skew(field: PrimeField, n: usize, rng: &mut ChaCha8Rng) -> SkewMatrix<PrimeField> {
    let p = field.modulus();
    let vals: Vec<u64> = (0..n * n).map(|_| rng.gen_range(0..p)).collect();
    SkewMatrix::from_fn(field, n, |i, j| vals[(i - 1) * n + j - 1])
}

fn brill(c: &mut Collector, o: &VerifyOptions) {
    let n = c.n;
    if n <= BRILL_SYMBOLIC_MAX {
        let g = generic_skew(n);
        let mut cases = 0;
        let mut failure = None;
        'outer: for k in 1..=BRILL_MINOR_MAX.min(n) {
            for rows in IndexSet::k_subsets(n, k) {
                for cols in IndexSet::k_subsets(n, k) {
                    cases += 1;
                    let oracle = det_oracle(&g.submatrix(&rows.to_vec(), &cols.to_vec())).expect("square");
                    match brill_minor(&g, rows, cols) {
                        Ok(v) if v == oracle => {}
                        Ok(_) => failure = Some(format!("rows {rows} cols {cols}")),
                        Err(e) => failure = Some(e.to_string()),
                    }
                    if failure.is_some() {
                        break 'outer;
                    }
                }
            }
        }
        c.push("symbolic", "brill-minor", cases, failure);
    } else {
        let failure = match PrimeField::new(o.prime) {
            Err(e) => Some(e.to_string()),
            Ok(field) => {
                let mut rng = ChaCha8Rng::seed_from_u64(o.seed ^ ((n as u64) << 32));
                (0..BRILL_TRIALS).find_map(|trial| {
                    let m = random_skew(field, n, &mut rng);
                    let size = rng.gen_range(1..=n);
                    let mut pick = || {
                        let mut all: Vec<usize> = (1..=n).collect();
                        all.shuffle(&mut rng);
                        all[..size].iter().copied().collect::<IndexSet>()
                    };
                    let (rows, cols) = (pick(), pick());
                    let oracle = det_oracle(&m.submatrix(&rows.to_vec(), &cols.to_vec())).expect("square");
                    match brill_minor(&m, rows, cols) {
                        Ok(v) if v == oracle => None,
                        Ok(_) => Some(format!("trial {trial}: rows {rows} cols {cols}")),
                        Err(e) => Some(e.to_string()),
                    }
                })
            }
        };
        c.push(format!("mod {}", o.prime), "brill-minor", BRILL_TRIALS, failure);
    }

    let parity = Parity::of(n);
    if n < parity.min_size() {
        return;
    }
    let triples: Vec<IndexSet> = IndexSet::k_subsets(n, 3).collect();
    let first = IndexSet::from([1, 2, 3]);
    let triple = |r: IndexSet| -> [usize; 3] {
        let v = r.to_vec();
        [v[0], v[1], v[2]]
    };
    if n <= 8 {
        let g = generic_skew(n);
        let failure = triples.iter().find_map(|&r| {
            let oracle = complementary_minor(&g, r, first).expect("valid sets");
            match d3_minor_formula(&g, parity, triple(r)) {
                Ok(v) if v == oracle => None,
                Ok(_) => Some(format!("r = {r}")),
                Err(e) => Some(e.to_string()),
            }
        });
        c.push("symbolic", "d3-minor-formula", triples.len(), failure);
    } else if let Ok(field) = PrimeField::new(o.prime) {
        let mut rng = ChaCha8Rng::seed_from_u64(o.seed.wrapping_add(n as u64));
        let m = random_skew(field, n, &mut rng);
        let failure = triples.iter().find_map(|&r| {
            let oracle = complementary_minor(&m, r, first).expect("valid sets");
            match d3_minor_formula(&m, parity, triple(r)) {
                Ok(v) if v == oracle => None,
                Ok(_) => Some(format!("r = {r}")),
                Err(e) => Some(e.to_string()),
            }
        });
        c.push(format!("mod {}", o.prime), "d3-minor-formula", triples.len(), failure);
    }
}

fn complex(c: &mut Collector, o: &VerifyOptions) {
    let (n, parity) = (c.n, Parity::of(c.n));
    for v in Variant::ALL {
        let cx = build(n, parity, v).expect("size accepted by the suite");
        c.result(v.name(), "d1*d2 = 0, d2*d3 = 0", check_complex(&cx));
        if v == Variant::Generic {
            c.result(v.name(), "d3-column-independence", check_column_independence(&cx));
            let seeds: Vec<u64> = (0..o.votes as u64).map(|k| o.seed + k).collect();
            let failure = match rank_vote(&cx, &seeds, o.prime) {
                Ok((ranks, _)) if ranks == Ranks::expected(n) => None,
                Ok((ranks, votes)) => Some(format!("ranks {ranks} ({votes}/{} votes)", seeds.len())),
                Err(e) => Some(e.to_string()),
            };
            c.push(v.name(), "ranks (n-3, 3, 1)", seeds.len(), failure);
        }
    }
}

/// Integer point with entries in `1..=1000`, drawn from the seed.
fn integer_point(n: usize, seed: u64) -> SkewMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vals: Vec<i64> = (0..n * n).map(|_| rng.gen_range(1..=1000)).collect();
    SkewMatrix::from_fn(crate::PolyRing, n, |i, j| Polynomial::from(vals[(i - 1) * n + j - 1]))
}

fn minor_product(c: &mut Collector, o: &VerifyOptions) {
    let (n, parity) = (c.n, Parity::of(c.n));
    let expected = 4 * n * (n - 1) * (n - 2) / 6;
    if o.specialize {
        let cx = from_matrix(integer_point(n, o.seed), parity, Variant::Generic);
        let mut failure = None;
        let mut cases = 0;
        for r in IndexSet::k_subsets(n, 3) {
            for s in IndexSet::k_subsets(4, 3) {
                cases += 1;
                let (r, s) = (r.to_vec(), s.to_vec());
                if let Err(e) = check_minor_product(&cx, [r[0], r[1], r[2]], [s[0], s[1], s[2]]) {
                    failure.get_or_insert(e.to_string());
                }
            }
        }
        c.push(format!("integer point, seed {}", o.seed), "minor-product", cases, failure);
    } else {
        let cx = build(n, parity, Variant::Generic).expect("size accepted by the suite");
        let (cases, failure) = match minor_product_signs(&cx) {
            Ok(signs) if signs.len() == expected => (signs.len(), None),
            Ok(signs) => (signs.len(), Some(format!("expected {expected} pairs"))),
            Err(e) => (0, Some(e.to_string())),
        };
        c.push("symbolic", "minor-product", cases, failure);
    }
}

fn equivariant(c: &mut Collector) {
    let (n, parity) = (c.n, Parity::of(c.n));
    let m = match parity {
        Parity::Odd => (n - 3) / 2,
        Parity::Even => (n - 4) / 2,
    };
    let context = format!("m={m} {parity}");
    c.result(context.clone(), "substitution", substitution_check(m, parity));
    let bidegrees = equivariant_differentials(m, parity).and_then(|cx| bidegree_check(&cx));
    c.result(context, "bidegrees", bidegrees);
}

/// The Hasse diagram of the even subsets of `{1..4}` as `(lower, upper,
/// reflection)`, read from the reference figure.
pub fn reference_diagram() -> Vec<(IndexSet, IndexSet, usize)> {
    vec![
        (IndexSet::EMPTY, IndexSet::from([3, 4]), 4),
        (IndexSet::from([2, 4]), IndexSet::from([3, 4]), 2),
        (IndexSet::from([1, 4]), IndexSet::from([2, 4]), 1),
        (IndexSet::from([2, 3]), IndexSet::from([2, 4]), 3),
        (IndexSet::from([1, 3]), IndexSet::from([1, 4]), 3),
        (IndexSet::from([1, 3]), IndexSet::from([2, 3]), 1),
        (IndexSet::from([1, 2]), IndexSet::from([1, 3]), 2),
        (IndexSet::from([1, 2]), IndexSet::from([1, 2, 3, 4]), 4),
    ]
}

/// Whether the spinor poset for `n = 4` has exactly the reference covers.
pub fn check_reference_diagram() -> Result<(), String> {
    let p = SubsetPoset::spinor(4).map_err(|e| e.to_string())?;
    let mut got: Vec<(IndexSet, IndexSet, usize)> =
        p.covers().iter().map(|c| (c.lower, c.upper, c.reflection)).collect();
    let mut want = reference_diagram();
    got.sort();
    want.sort();
    if p.len() == 8 && got == want {
        Ok(())
    } else {
        Err(format!("{} elements, covers {got:?}", p.len()))
    }
}

fn schubert(c: &mut Collector) {
    let n = c.n;
    for class in [Parity::Even, Parity::Odd] {
        let context = format!("{class} subsets");
        let p = match SubsetPoset::new(n, class) {
            Ok(p) => p,
            Err(e) => {
                c.push(context, "poset", 0, Some(e.to_string()));
                continue;
            }
        };
        let size = (p.len() != 1 << (n - 1)).then(|| format!("{} elements", p.len()));
        c.push(context.clone(), "size 2^(n-1)", 1, size);

        if n >= 2 {
            let mut cases = 0;
            let mut failure = None;
            for &s in p.elements() {
                for i in 1..=n {
                    cases += 1;
                    let t = weyl_action(n, i, s).expect("valid reflection");
                    if !p.contains(t) || weyl_action(n, i, t) != Ok(s) {
                        failure.get_or_insert(format!("s{i} on {s}"));
                    }
                }
            }
            c.push(context.clone(), "reflections are involutions", cases, failure);
        }

        if n <= ORDER_AXIOMS_MAX {
            let els = p.elements();
            let leq = |a, b| p.leq(a, b).expect("elements of the poset");
            let mut failure = None;
            for &a in els {
                if !leq(a, a) {
                    failure.get_or_insert(format!("reflexivity at {a}"));
                }
                for &b in els {
                    if !leq(a, b) {
                        continue;
                    }
                    if a != b && leq(b, a) {
                        failure.get_or_insert(format!("antisymmetry at {a}, {b}"));
                    }
                    if let Some(&x) = els.iter().find(|&&x| leq(b, x) && !leq(a, x)) {
                        failure.get_or_insert(format!("transitivity at {a}, {b}, {x}"));
                    }
                }
            }
            c.push(context, "partial order", els.len(), failure);
        }
    }
    if n == 4 {
        c.result("even subsets", "reference diagram", check_reference_diagram());
    }
    if n >= 5 {
        let signs = generator_signs(n).map(|_| ());
        c.result(Parity::of(n).name(), "w'' generators = d1 up to sign", signs);
        let ranks = match mapping_cone(n) {
            Ok(cone) if cone.aci.ranks() == [1, 4, n, n - 3] => Ok(()),
            Ok(cone) => Err(format!("ranks {:?}", cone.aci.ranks())),
            Err(e) => Err(e.to_string()),
        };
        c.result(Parity::of(n).name(), "mapping-cone ranks (1, 4, n, n-3)", ranks);
    }
}
