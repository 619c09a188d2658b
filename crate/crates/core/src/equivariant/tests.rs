use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::matrix::PolyMatrix;
use crate::polyring::{class_by_kind, Bidegree};
use crate::resolution::check_differentials;
use crate::ring::PolyRing;

fn c(i: usize, j: usize) -> Polynomial {
    Polynomial::var(VariableId::c(i, j))
}

fn u(k: usize, i: usize) -> Polynomial {
    Polynomial::var(VariableId::u(k, i))
}

const PARITIES: [Parity; 2] = [Parity::Odd, Parity::Even];

#[test]
fn wedge_examples() {
    let g = |i: usize| ExteriorElement::basis(4, &[i]);
    let g12 = g(1).wedge(&g(2)).unwrap();
    assert_eq!(g12, ExteriorElement::basis(4, &[1, 2]));
    assert_eq!(g12.coefficient(IndexSet::from([1, 2])), Polynomial::one());
    assert!(g(1).wedge(&g(1)).unwrap().is_zero());
    assert_eq!(g(2).wedge(&g(1)).unwrap(), g12.scale(&Polynomial::constant(-1)));
    let g34 = ExteriorElement::basis(4, &[3, 4]);
    assert_eq!(g12.wedge(&g34).unwrap(), g34.wedge(&g12).unwrap());
    assert_eq!(ExteriorElement::basis(4, &[2, 1]), g(2).wedge(&g(1)).unwrap());
    assert_eq!(
        g(1).wedge(&ExteriorElement::basis(3, &[1])),
        Err(EquivariantError::RankMismatch(4, 3))
    );
    assert_eq!(g12.add(&g(3)), Err(EquivariantError::DegreeMismatch(2, 1)));
    assert!(g12.wedge(&g34).unwrap().wedge(&g(1)).unwrap().is_zero());
}

fn small_vector(rank: usize) -> impl Strategy<Value = ExteriorElement> {
    prop::collection::vec(-3i64..=3, rank).prop_map(move |v| ExteriorElement::vector(rank, v.into_iter().map(Polynomial::from)))
}

proptest! {
    #[test]
    fn wedge_is_associative_and_alternating(a in small_vector(5), b in small_vector(5), d in small_vector(5)) {
        let ab = a.wedge(&b).unwrap();
        prop_assert_eq!(ab.wedge(&d).unwrap(), a.wedge(&b.wedge(&d).unwrap()).unwrap());
        prop_assert_eq!(ab.add(&b.wedge(&a).unwrap()).unwrap(), ExteriorElement::zero(5, 2));
        prop_assert!(a.wedge(&a).unwrap().is_zero());
    }
}

#[test]
fn c_power_examples() {
    assert_eq!(build_c_power(2, Parity::Odd, 1).unwrap(), c_form(4));
    assert_eq!(
        build_c_power(2, Parity::Odd, 0).unwrap(),
        ExteriorElement::scalar(4, Polynomial::one())
    );
    let top = build_c_power(2, Parity::Odd, 2).unwrap().top_coefficient();
    assert_eq!(top, c(1, 2) * c(3, 4) - c(1, 3) * c(2, 4) + c(1, 4) * c(2, 3));
    assert_eq!(
        build_c_power(2, Parity::Odd, 3),
        Err(EquivariantError::DegreeOverflow { j: 3, rank: 4 })
    );
    assert_eq!(build_c_power(0, Parity::Odd, 0), Err(EquivariantError::BadParameter(0)));
}

// The literal wedge power is j! times the Pfaffian form.
#[test]
fn iterated_wedge_is_factorial_multiple() {
    for (m, parity) in [(2, Parity::Odd), (2, Parity::Even), (3, Parity::Odd), (3, Parity::Even)] {
        let rank = f_rank(m, parity);
        let cf = c_form(rank);
        let mut factorial = 1i64;
        for j in 0..=rank / 2 {
            if j > 0 {
                factorial *= j as i64;
            }
            let divided = build_c_power(m, parity, j).unwrap();
            assert_eq!(
                iterated_wedge(&cf, j),
                divided.scale(&Polynomial::constant(factorial)),
                "m={m} j={j}"
            );
        }
    }
}

/// Sign of `g_S ^ g_{i1} ^ ... ^ g_{ik}` against the sorted form, `S` the
/// complement of the `i`.
fn tail_sign(rank: usize, tail: &[usize]) -> i64 {
    let rest: Vec<usize> = (1..=rank).filter(|i| !tail.contains(i)).collect();
    let mut inversions = 0;
    for (k, &i) in tail.iter().enumerate() {
        inversions += rest.iter().filter(|&&s| s > i).count();
        inversions += tail[k + 1..].iter().filter(|&&t| t < i).count();
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn generator_oracle(m: usize, parity: Parity) -> [Polynomial; 4] {
    let rank = f_rank(m, parity);
    let a = c_matrix(rank);
    let pf_without = |idx: &[usize]| a.comp_pfaffian(idx.iter().copied().collect::<IndexSet>());
    let two = |p: usize, q: usize| {
        Polynomial::sum(IndexSet::k_subsets(rank, 2).map(|s| {
            let [i, j] = [s.to_vec()[0], s.to_vec()[1]];
            let minor = u(p, i) * u(q, j) - u(p, j) * u(q, i);
            Polynomial::constant(tail_sign(rank, &[i, j])) * minor * pf_without(&[i, j])
        }))
    };
    let one = |p: usize| {
        Polynomial::sum((1..=rank).map(|i| Polynomial::constant(tail_sign(rank, &[i])) * u(p, i) * pf_without(&[i])))
    };
    match parity {
        Parity::Odd => [a.pfaffian(), two(2, 3), two(1, 3), two(1, 2)],
        Parity::Even => {
            let three = Polynomial::sum(IndexSet::k_subsets(rank, 3).map(|s| {
                let t = s.to_vec();
                let b = PolyMatrix::from_fn(PolyRing, 3, 3, |k, l| u(k, t[l - 1]));
                let minor = crate::brill::det_oracle(&b).unwrap();
                Polynomial::constant(tail_sign(rank, &t)) * minor * pf_without(&t)
            }));
            [three, one(1), one(2), one(3)]
        }
    }
}

#[test]
fn generators_match_oracle() {
    for parity in PARITIES {
        for m in 1..=3 {
            assert_eq!(x_generators(m, parity), generator_oracle(m, parity), "m={m} {parity}");
        }
    }
}

#[test]
fn generator_examples() {
    let gens = equivariant_generators(1, Parity::Odd).unwrap();
    assert_eq!(gens[0], c(1, 2));
    assert_eq!(gens[1], u(1, 1) * u(2, 2) - u(1, 2) * u(2, 1));
    let gens = equivariant_generators(2, Parity::Even).unwrap();
    // C^2 ^ u1 over rank 5: sum_i (-1)^(i+1) u_1_i Pf(A without i)
    let a = c_matrix(5);
    let expected = Polynomial::sum((1..=5).map(|i| {
        let term = u(1, i) * a.comp_pfaffian([i]);
        if i % 2 == 1 {
            term
        } else {
            -term
        }
    }));
    assert_eq!(gens[1], expected);
    assert_eq!(equivariant_generators(0, Parity::Even), Err(EquivariantError::BadParameter(0)));
}

#[test]
fn differential_examples() {
    let eq = equivariant_differentials(2, Parity::Odd).unwrap();
    for k in 1..=3 {
        for i in 1..=4 {
            assert_eq!(*eq.d3.entry(k, i), u(k, i));
        }
    }
    assert_eq!(*eq.d3.entry(4, 2), c(1, 2));
    assert_eq!(*eq.d3.entry(5, 1), -c(1, 2));
    let x = x_generators(2, Parity::Odd);
    assert_eq!(eq.d1.row(1), &x[..]);
    assert_eq!(x[0], build_c_power(2, Parity::Odd, 2).unwrap().top_coefficient());

    let eq = equivariant_differentials(1, Parity::Even).unwrap();
    let a = c_matrix(3);
    assert!((1..=3).all(|j| eq.d2.entry(1, j).is_zero()));
    assert_eq!(*eq.d2.entry(1, 4), a.comp_pfaffian([1]));
    assert_eq!(*eq.d2.entry(1, 5), -a.comp_pfaffian([2]));
}

#[test]
fn complexes_before_and_after_substitution() {
    for parity in PARITIES {
        for m in 1..=3 {
            let eq = equivariant_differentials(m, parity).unwrap();
            assert_eq!(check_differentials(&eq.d1, &eq.d2, &eq.d3), Ok(()), "m={m} {parity}");
            let (d1, d2, d3) = substitute(&eq);
            assert_eq!(check_differentials(&d1, &d2, &d3), Ok(()), "m={m} {parity}");
        }
    }
}

#[test]
fn substitution_over_the_range() {
    for parity in PARITIES {
        for m in 1..=3 {
            assert_eq!(substitution_check(m, parity), Ok(()), "m={m} {parity}");
        }
    }
}

#[test]
fn swapped_u_rows_are_detected() {
    let mut eq = equivariant_differentials(1, Parity::Odd).unwrap();
    let d3 = eq.d3.clone();
    eq.d3 = PolyMatrix::from_fn(PolyRing, d3.rows(), d3.cols(), |i, j| {
        let i = match i {
            1 => 2,
            2 => 1,
            i => i,
        };
        d3.entry(i, j).clone()
    });
    let err = compare_with_resolution(&eq, &sign_table(1, Parity::Odd)).unwrap_err();
    assert!(matches!(err, EquivariantError::Mismatch { ref what, .. } if what == "d3 entry (1, 1)"), "{err}");
}

#[test]
fn sign_table_golden() {
    let mut lines = String::new();
    for parity in PARITIES {
        for m in 1..=3 {
            let derived = derive_sign_table(&equivariant_differentials(m, parity).unwrap()).unwrap();
            assert_eq!(derived, sign_table(m, parity), "m={m} {parity}");
            lines.push_str(&format!("{m} {parity} {derived}\n"));
        }
    }
    crate::golden::check("equivariant_signs.txt", &lines);
}

#[test]
fn bidegrees_over_the_range() {
    for parity in PARITIES {
        for m in 1..=3 {
            let eq = equivariant_differentials(m, parity).unwrap();
            assert_eq!(bidegree_check(&eq), Ok(()), "m={m} {parity}");
        }
    }
}

#[test]
fn bidegree_examples() {
    let m = 3;
    let eq = equivariant_differentials(m, Parity::Odd).unwrap();
    let bd = |p: &Polynomial| p.bidegree(class_by_kind);
    assert_eq!(bd(eq.d3.entry(4, 2)), Bidegree::Homogeneous(1, 0));
    assert_eq!(bd(eq.d1.entry(1, 1)), Bidegree::Homogeneous(3, 0));
    assert_eq!(bd(eq.d2.entry(2, 5)), Bidegree::Homogeneous(2, 1));
    assert_eq!(bd(eq.d2.entry(1, 5)), Bidegree::Homogeneous(1, 3));

    let mut bad = eq.clone();
    let entry = bad.d2.entry(2, 5) + &c(1, 2);
    bad.d2.set(2, 5, entry);
    assert!(matches!(
        bidegree_check(&bad),
        Err(EquivariantError::Bidegree { matrix: "d2", row: 2, col: 5, .. })
    ));
}

#[test]
fn no_entry_has_a_constant_term() {
    for parity in PARITIES {
        for m in 1..=3 {
            let eq = equivariant_differentials(m, parity).unwrap();
            for matrix in [&eq.d1, &eq.d2, &eq.d3] {
                assert!(matrix.iter_entries().all(|(_, _, p)| p.constant_term() == BigInt::from(0)));
            }
        }
    }
}

#[test]
fn json_has_grading() {
    let eq = equivariant_differentials(1, Parity::Odd).unwrap();
    let j = eq.to_json();
    assert_eq!(j["n"], 5);
    assert_eq!(j["grading"]["f1"][0], serde_json::json!([-1, 0]));
    assert_eq!(j["grading"]["f1"][1], serde_json::json!([0, -2]));
    assert_eq!(j["grading"]["f2"].as_array().unwrap().len(), 5);
    assert_eq!(j["grading"]["f3"][0], serde_json::json!([-1, -3]));
    assert_eq!(j["d1"][0][0], "c_1_2");
}
