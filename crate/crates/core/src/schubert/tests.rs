use std::collections::{BTreeSet, VecDeque};

use super::*;
use crate::pfaffian::{generic_skew, SkewMatrix};
use crate::resolution::build;
use crate::resolution::Variant;

const CLASSES: [Parity; 2] = [Parity::Even, Parity::Odd];

fn set<const N: usize>(xs: [usize; N]) -> IndexSet {
    IndexSet::from(xs)
}

#[test]
fn weyl_examples() {
    assert_eq!(weyl_action(4, 2, set([3, 4])).unwrap(), set([2, 4]));
    assert_eq!(weyl_action(4, 4, IndexSet::EMPTY).unwrap(), set([3, 4]));
    assert_eq!(weyl_action(4, 1, set([3, 4])).unwrap(), set([3, 4]));
    assert_eq!(weyl_action(4, 4, set([1, 2, 3, 4])).unwrap(), set([1, 2]));
    assert_eq!(weyl_action(4, 4, set([1, 4])).unwrap(), set([1, 4]));
    assert_eq!(weyl_action(4, 3, set([2, 3])).unwrap(), set([2, 4]));
    assert_eq!(weyl_action(4, 5, set([1])), Err(SchubertError::BadReflection { i: 5, n: 4 }));
    assert_eq!(weyl_action(4, 0, set([1])), Err(SchubertError::BadReflection { i: 0, n: 4 }));
}

#[test]
fn reflections_are_involutions_on_the_poset() {
    for n in 2..=8 {
        for class in CLASSES {
            let p = SubsetPoset::new(n, class).unwrap();
            for &s in p.elements() {
                for i in 1..=n {
                    let t = p.act(i, s).unwrap();
                    assert!(p.contains(t), "s{i}({s}) leaves the poset for n = {n}");
                    assert_eq!(p.act(i, t).unwrap(), s);
                }
            }
        }
    }
}

#[test]
fn poset_sizes() {
    for n in 1..=10 {
        for class in CLASSES {
            assert_eq!(SubsetPoset::new(n, class).unwrap().len(), 1 << (n - 1), "n = {n}, {class}");
        }
    }
    assert!(matches!(
        SubsetPoset::new(0, Parity::Even),
        Err(SchubertError::SizeOutOfRange { .. })
    ));
    assert!(SubsetPoset::new(MAX_POSET_SIZE + 1, Parity::Even).is_err());
}

#[test]
fn order_axioms() {
    for n in 1..=7 {
        for class in CLASSES {
            let p = SubsetPoset::new(n, class).unwrap();
            let els = p.elements();
            let leq = |a, b| p.leq(a, b).unwrap();
            for &a in els {
                assert!(leq(a, a));
                for &b in els {
                    if a != b && leq(a, b) {
                        assert!(!leq(b, a), "{a} and {b} for n = {n}");
                    }
                    if !leq(a, b) {
                        continue;
                    }
                    for &c in els {
                        if leq(b, c) {
                            assert!(leq(a, c));
                        }
                    }
                }
            }
        }
    }
}

/// Reachability over sorted tuples, written out directly from the two kinds
/// of generating inequality.
fn oracle_leq(n: usize, a: &[usize], b: &[usize]) -> bool {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([a.to_vec()]);
    while let Some(cur) = queue.pop_front() {
        if cur == b {
            return true;
        }
        if !seen.insert(cur.clone()) {
            continue;
        }
        for k in 0..cur.len() {
            let next = cur[k] + 1;
            if next <= n && cur.get(k + 1) != Some(&next) {
                let mut t = cur.clone();
                t[k] = next;
                queue.push_back(t);
            }
        }
        if cur.last().is_none_or(|&m| m < n - 1) {
            let mut t = cur.clone();
            t.extend([n - 1, n]);
            queue.push_back(t);
        }
    }
    false
}

#[test]
fn order_matches_oracle() {
    for n in 2..=6 {
        for class in CLASSES {
            let p = SubsetPoset::new(n, class).unwrap();
            for &a in p.elements() {
                for &b in p.elements() {
                    assert_eq!(
                        p.leq(a, b).unwrap(),
                        oracle_leq(n, &a.to_vec(), &b.to_vec()),
                        "{a} <= {b} for n = {n}"
                    );
                }
            }
        }
    }
}

#[test]
fn order_examples() {
    assert!(poset_leq(4, set([1, 4]), set([2, 4])).unwrap());
    assert!(poset_leq(4, IndexSet::EMPTY, set([3, 4])).unwrap());
    // {1,2} <= {1,3} <= {1,4} by the generating inequalities.
    assert!(poset_leq(4, set([1, 2]), set([1, 4])).unwrap());
    assert!(!poset_leq(4, set([1, 4]), set([1, 2])).unwrap());
    assert!(!poset_leq(4, IndexSet::EMPTY, set([1, 2])).unwrap());
    assert_eq!(
        poset_leq(4, set([1]), set([1, 2])),
        Err(SchubertError::NotInPoset {
            set: set([1]),
            n: 4,
            class: Parity::Even
        })
    );
    assert!(!poset_leq(5, set([5]), set([4])).unwrap());
    assert!(poset_leq(5, set([1, 2]), set([4])).is_err());
    assert!(poset_leq(5, set([4]), set([5])).unwrap());
}

#[test]
fn n4_hasse_diagram() {
    let p = SubsetPoset::spinor(4).unwrap();
    assert_eq!(p.len(), 8);
    let got: BTreeSet<(IndexSet, IndexSet, usize)> =
        p.covers().iter().map(|c| (c.lower, c.upper, c.reflection)).collect();
    let want: BTreeSet<(IndexSet, IndexSet, usize)> = [
        (IndexSet::EMPTY, set([3, 4]), 4),
        (set([2, 4]), set([3, 4]), 2),
        (set([1, 4]), set([2, 4]), 1),
        (set([2, 3]), set([2, 4]), 3),
        (set([1, 3]), set([1, 4]), 3),
        (set([1, 3]), set([2, 3]), 1),
        (set([1, 2]), set([1, 3]), 2),
        (set([1, 2]), set([1, 2, 3, 4]), 4),
    ]
    .into_iter()
    .collect();
    assert_eq!(got, want);
    assert_eq!(p.minimal_elements(), vec![IndexSet::EMPTY, set([1, 2])]);
    assert_eq!(p.maximal_elements(), vec![set([3, 4]), set([1, 2, 3, 4])]);
    crate::golden::check("schubert_pe4.dot", &p.to_dot());
}

#[test]
fn covers_are_reflections() {
    for n in 2..=9 {
        for class in CLASSES {
            let p = SubsetPoset::new(n, class).unwrap();
            for c in p.covers() {
                assert_eq!(weyl_action(n, c.reflection, c.lower).unwrap(), c.upper);
                assert!(p.leq(c.lower, c.upper).unwrap());
            }
            // No element is isolated in the Hasse diagram.
            if p.len() > 1 {
                let touched: BTreeSet<IndexSet> = p.covers().iter().flat_map(|c| [c.lower, c.upper]).collect();
                assert_eq!(touched.len(), p.len(), "n = {n}, {class}");
            }
        }
    }
}

#[test]
fn spinor_examples() {
    for n in 4..=7 {
        let x = generic_skew(n);
        match Parity::of(n) {
            Parity::Even => assert_eq!(spinor_to_pfaffian(IndexSet::EMPTY, &x).unwrap(), x.pfaffian()),
            Parity::Odd => {
                let rest: IndexSet = (2..=n).collect();
                assert_eq!(spinor_to_pfaffian(IndexSet::singleton(n), &x).unwrap(), x.sub_pfaffian(rest));
            }
        }
    }
    let x = generic_skew(4);
    assert_eq!(spinor_to_pfaffian(set([1, 2]), &x).unwrap(), x.sub_pfaffian(set([1, 2])));
    assert_eq!(spinor_to_pfaffian(set([1, 2]), &x).unwrap(), x.entry(1, 2).clone());
    assert_eq!(spinor_to_pfaffian(set([1, 2, 3, 4]), &x).unwrap(), Polynomial::one());
    assert!(spinor_to_pfaffian(set([1]), &x).is_err());
    assert!(spinor_to_pfaffian(set([1, 5]), &x).is_err());
}

#[test]
fn coset_subsets() {
    let subsets = |n: usize, kind: IdealKind| -> Vec<IndexSet> {
        kind.words(n).iter().map(|w| coset_subset(n, w).unwrap()).collect()
    };
    assert_eq!(
        subsets(7, IdealKind::WPrime),
        (1..=7).rev().map(IndexSet::singleton).collect::<Vec<_>>()
    );
    assert_eq!(
        subsets(7, IdealKind::WDoublePrime),
        vec![set([7]), set([6]), set([5]), set([5, 6, 7])]
    );
    let mut even = vec![IndexSet::EMPTY];
    even.extend((1..=5).rev().map(|i| set([i, 6])));
    assert_eq!(subsets(6, IdealKind::WPrime), even);
    assert_eq!(
        subsets(6, IdealKind::WDoublePrime),
        vec![IndexSet::EMPTY, set([5, 6]), set([4, 6]), set([4, 5])]
    );
    // Every letter acts nontrivially, so the words are reduced coset words.
    for n in 5..=10 {
        for kind in IdealKind::ALL {
            for word in kind.words(n) {
                for k in 0..word.len() {
                    let before = coset_subset(n, &word[k + 1..]).unwrap();
                    let after = coset_subset(n, &word[k..]).unwrap();
                    assert_ne!(before, after, "{word:?} for n = {n}");
                }
            }
        }
    }
}

#[test]
fn four_generator_ideal_is_the_first_differential() {
    for n in 5..=8 {
        let parity = Parity::of(n);
        let c = build(n, parity, Variant::Generic).unwrap();
        let gens = schubert_ideal_generators(n, IdealKind::WDoublePrime, &c.matrix).unwrap();
        let up_to_sign = |v: &[Polynomial]| -> BTreeSet<String> {
            v.iter().map(|p| p.to_string().min((-p).to_string())).collect()
        };
        assert_eq!(up_to_sign(&gens), up_to_sign(&c.generators()), "n = {n}");
        let want = match parity {
            Parity::Odd => vec![(1, -1), (2, 1), (3, -1), (4, 1)],
            Parity::Even => vec![(1, 1), (2, 1), (3, 1), (4, 1)],
        };
        assert_eq!(generator_signs(n).unwrap(), want, "n = {n}");
    }
}

#[test]
fn unmatched_generator_is_reported() {
    let x = SkewMatrix::from_fn(crate::ring::PolyRing, 5, |i, j| Polynomial::from((i * 10 + j) as i64));
    assert!(matches!(
        schubert_ideal(6, IdealKind::WPrime, &x),
        Err(SchubertError::MatrixSize { expected: 6, found: 5 })
    ));
    assert!(matches!(
        schubert_ideal(4, IdealKind::WPrime, &generic_skew(4)),
        Err(SchubertError::SizeOutOfRange { .. })
    ));
}

#[test]
fn gorenstein_ideal_examples() {
    let x = generic_skew(5);
    let gens = schubert_ideal_generators(5, IdealKind::WPrime, &x).unwrap();
    let want: Vec<Polynomial> = (1..=5).map(|i| x.comp_pfaffian(IndexSet::singleton(i))).collect();
    assert_eq!(gens, want);
    assert!(schubert_ideal(5, IdealKind::WPrime, &x).unwrap().redundant.is_empty());

    for n in [6, 8] {
        let x = generic_skew(n);
        let ideal = schubert_ideal(n, IdealKind::WPrime, &x).unwrap();
        assert_eq!(ideal.generators.len(), n);
        assert_eq!(ideal.generators[0].pfaffian, x.pfaffian());
        assert_eq!(ideal.redundant, vec![1]);
        let rest: BTreeSet<IndexSet> = ideal.generators[1..].iter().map(|g| g.removed).collect();
        assert_eq!(rest, (2..=n).map(|i| set([1, i])).collect());
        // Pf(X) = sum_j (-1)^j x_1j Pf(X without 1, j) lies in the ideal of
        // the other generators.
        let expansion = Polynomial::sum((2..=n).map(|j| {
            let term = x.entry(1, j) * &x.comp_pfaffian(set([1, j]));
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        }));
        assert_eq!(expansion, x.pfaffian());
    }
}

#[test]
fn ideal_json() {
    let x = generic_skew(6);
    let v = schubert_ideal(6, IdealKind::WPrime, &x).unwrap().to_json();
    assert_eq!(v["ideal"], "w-prime");
    assert_eq!(v["redundant"], serde_json::json!([1]));
    assert_eq!(v["generators"][0]["word"], "id");
    assert_eq!(v["generators"][1]["word"], "s5");
    assert_eq!(v["generators"][2]["word"], "s4s5");
    assert_eq!(v["generators"][2]["subset"], serde_json::json!([4, 6]));
    assert_eq!(v["generators"][2]["removed"], serde_json::json!([1, 3]));
    let w = schubert_ideal(5, IdealKind::WDoublePrime, &generic_skew(5)).unwrap().to_json();
    assert_eq!(w["generators"][3]["word"], "s5s3s4");
    assert_eq!(w["generators"][3]["removed"], serde_json::json!([1, 2, 3]));
    assert_eq!("w''".parse::<IdealKind>(), Ok(IdealKind::WDoublePrime));
    assert!("w".parse::<IdealKind>().is_err());
}

/// The formats displayed for `n = 2m + 2` and `n = 2m + 3`.
fn displayed_formats(n: usize) -> (GradedFormat, GradedFormat) {
    if n % 2 == 0 {
        let m = (n - 2) / 2;
        let mi = m as i64;
        (
            GradedFormat::new([
                vec![(1, 0)],
                vec![(2 * m + 1, mi)],
                vec![(2 * m + 1, mi + 1)],
                vec![(1, 2 * mi + 1)],
            ]),
            GradedFormat::new([
                vec![(1, 0)],
                vec![(1, mi + 1), (3, mi)],
                vec![(2 * m + 2, 2 * mi)],
                vec![(2 * m - 1, 2 * mi + 1)],
            ]),
        )
    } else {
        let m = (n - 3) / 2;
        let mi = m as i64;
        (
            GradedFormat::new([
                vec![(1, 0)],
                vec![(2 * m + 3, mi + 1)],
                vec![(2 * m + 3, mi + 2)],
                vec![(1, 2 * mi + 3)],
            ]),
            GradedFormat::new([
                vec![(1, 0)],
                vec![(1, mi), (3, mi + 1)],
                vec![(2 * m + 3, 2 * mi + 1)],
                vec![(2 * m, 2 * mi + 2)],
            ]),
        )
    }
}

#[test]
fn mapping_cone_matches_displays() {
    for n in 5..=10 {
        let cone = mapping_cone(n).unwrap();
        assert_eq!((cone.gorenstein.clone(), cone.aci.clone()), displayed_formats(n), "n = {n}");
        assert_eq!(cone.aci.ranks(), [1, 4, n, n - 3]);
        let linked: usize = cone.cancelled.iter().filter(|c| c.0 == 3).map(|c| c.1).sum();
        assert_eq!(linked, if n % 2 == 0 { 2 } else { 3 }, "n = {n}");
    }
    let m = 2;
    assert_eq!(mapping_cone(6).unwrap().sequence_degrees, [m + 1, m, m]);
    assert_eq!(mapping_cone(7).unwrap().sequence_degrees, [m + 1, m + 1, m + 1]);
    assert_eq!(
        mapping_cone_format(6).unwrap().1.to_string(),
        "0 -> R^3(-5) -> R^6(-4) -> R^3(-2) + R(-3) -> R"
    );
    assert_eq!(
        mapping_cone_format(7).unwrap().0.to_string(),
        "0 -> R(-7) -> R^7(-4) -> R^7(-3) -> R"
    );
    assert!(mapping_cone(4).is_err());
}

/// Twists read off the homogeneous differentials of the resolution.
fn resolution_format(n: usize) -> GradedFormat {
    let c = build(n, Parity::of(n), Variant::Generic).unwrap();
    let deg = |p: &Polynomial| p.degree().map(i64::from);
    let mut prev: Vec<i64> = vec![0];
    let mut modules: [Vec<(usize, i64)>; 4] = [vec![(1, 0)], vec![], vec![], vec![]];
    for (d, m) in [&c.d1, &c.d2, &c.d3].into_iter().enumerate() {
        let mut twists = Vec::new();
        for j in 1..=m.cols() {
            let col: Vec<i64> = (1..=m.rows())
                .filter_map(|i| deg(m.entry(i, j)).map(|e| e + prev[i - 1]))
                .collect();
            assert!(col.windows(2).all(|w| w[0] == w[1]), "column {j} of d{} is not homogeneous", d + 1);
            twists.push(col[0]);
        }
        modules[d + 1] = twists.iter().map(|&t| (1, t)).collect();
        prev = twists;
    }
    GradedFormat::new(modules)
}

#[test]
fn mapping_cone_matches_resolution_degrees() {
    for n in 5..=8 {
        assert_eq!(mapping_cone(n).unwrap().aci, resolution_format(n), "n = {n}");
    }
}
