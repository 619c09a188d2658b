use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;

fn t(i: usize, j: usize) -> Polynomial {
    Polynomial::tau(i, j)
}

fn pf4() -> Polynomial {
    &t(1, 2) * &t(3, 4) - &t(1, 3) * &t(2, 4) + &t(1, 4) * &t(2, 3)
}

#[test]
fn additive_inverse_and_identity() {
    assert!((t(1, 2) + (-t(1, 2))).is_zero());
    let p = &t(1, 3) * &t(2, 4);
    assert_eq!(Polynomial::zero() + &p, p);
    let s = (t(1, 2) + t(1, 3)) + (t(1, 2) - t(1, 3));
    assert_eq!(s, Polynomial::constant(2) * t(1, 2));
}

#[test]
fn products() {
    assert_eq!((&t(1, 2) * &t(3, 4)).to_string(), "t_1_2*t_3_4");
    let d = (t(1, 2) - t(1, 3)) * (t(1, 2) + t(1, 3));
    assert_eq!(d.to_string(), "t_1_2^2-t_1_3^2");
    assert!((pf4() * Polynomial::zero()).is_zero());
}

#[test]
fn canonical_string() {
    assert_eq!(pf4().to_string(), "t_1_2*t_3_4-t_1_3*t_2_4+t_1_4*t_2_3");
    assert_eq!(Polynomial::zero().to_string(), "0");
    assert_eq!((-Polynomial::constant(3)).to_string(), "-3");
    let p = Polynomial::constant(-2) * t(4, 5) + Polynomial::one();
    assert_eq!(p.to_string(), "-2*t_4_5+1");
    assert_eq!(pf4().to_latex(), "t_{12}t_{34} - t_{13}t_{24} + t_{14}t_{23}");
}

#[test]
fn parse_roundtrip_examples() {
    for s in ["0", "1", "-7", "t_1_2*t_3_4-t_1_3*t_2_4+t_1_4*t_2_3", "-2*t_1_2^3*c_1_2+u_3_1"] {
        let p: Polynomial = s.parse().unwrap();
        assert_eq!(p.to_string(), s);
    }
    assert!("t_2_1".parse::<Polynomial>().is_err());
    assert!("t_1_2+".parse::<Polynomial>().is_err());
    assert!("x_1_2".parse::<Polynomial>().is_err());
}

#[test]
fn evaluate_examples() {
    let ones: BTreeMap<_, _> = pf4().variables().into_iter().map(|v| (v, BigInt::from(1))).collect();
    assert_eq!(pf4().evaluate(&ones).unwrap(), BigInt::from(1));
    assert_eq!(Polynomial::zero().evaluate(&BTreeMap::new()).unwrap(), BigInt::from(0));
    let sq = &t(1, 2) * &t(1, 2);
    let a = BTreeMap::from([(VariableId::tau(1, 2), BigInt::from(3))]);
    assert_eq!(sq.evaluate(&a).unwrap(), BigInt::from(9));
    assert_eq!(
        pf4().evaluate(&a),
        Err(PolyError::MissingVariable(VariableId::tau(1, 3)))
    );
}

#[test]
fn evaluate_mod_matches_exact() {
    let p = pf4() * pf4() - Polynomial::constant(5);
    let val = |v: VariableId| Some((v.i() * 7 + v.j() * 3) as u64);
    let exact: BTreeMap<_, _> = p
        .variables()
        .into_iter()
        .map(|v| (v, BigInt::from(val(v).unwrap())))
        .collect();
    let e = p.evaluate(&exact).unwrap();
    let m = p.evaluate_mod(val, 101).unwrap();
    assert_eq!(BigInt::from(m), ((e % 101) + 101) % 101);
}

#[test]
fn substitute_examples() {
    let c12 = VariableId::c(1, 2);
    let u11 = VariableId::u(1, 1);
    let m = BTreeMap::from([(c12, t(4, 5))]);
    assert_eq!(Polynomial::var(c12).substitute(&m).unwrap(), t(4, 5));
    let m2 = BTreeMap::from([(c12, t(4, 5)), (u11, t(1, 4))]);
    let p = Polynomial::var(u11) * Polynomial::var(c12);
    assert_eq!(p.substitute(&m2).unwrap(), &t(1, 4) * &t(4, 5));
    assert!(Polynomial::var(u11).substitute(&m).is_err());
}

#[test]
fn bidegree_examples() {
    let c = |i, j| Polynomial::var(VariableId::c(i, j));
    let u = |k, i| Polynomial::var(VariableId::u(k, i));
    assert_eq!((c(1, 2) * c(3, 4)).bidegree(class_by_kind), Bidegree::Homogeneous(2, 0));
    assert_eq!((u(1, 1) * u(2, 2) * c(1, 2)).bidegree(class_by_kind), Bidegree::Homogeneous(1, 2));
    assert_eq!((c(1, 2) + u(1, 1)).bidegree(class_by_kind), Bidegree::Inhomogeneous);
    assert_eq!(Polynomial::zero().bidegree(class_by_kind), Bidegree::Zero);
}

fn arb_poly() -> impl Strategy<Value = Polynomial> {
    let term = (
        -5i64..=5,
        proptest::collection::vec(((1usize..4), (0usize..3), (1u32..3)), 0..3),
    );
    proptest::collection::vec(term, 0..5).prop_map(|ts| {
        Polynomial::sum(ts.into_iter().map(|(c, fs)| {
            let m = Monomial::from_pairs(fs.into_iter().map(|(i, d, e)| (VariableId::tau(i, i + d + 1), e)));
            Polynomial::monomial(m, c)
        }))
    })
}

fn arb_assignment() -> impl Strategy<Value = BTreeMap<VariableId, BigInt>> {
    proptest::collection::vec(-4i64..=4, 15).prop_map(|vals| {
        let mut out = BTreeMap::new();
        let mut k = 0;
        for i in 1..=5 {
            for j in i + 1..=6 {
                out.insert(VariableId::tau(i, j), BigInt::from(vals[k]));
                k += 1;
            }
        }
        out
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in arb_poly(), b in arb_poly(), c in arb_poly(), pt in arb_assignment()) {
        let lhs = (&a * &b + &c).evaluate(&pt).unwrap();
        let rhs = a.evaluate(&pt).unwrap() * b.evaluate(&pt).unwrap() + c.evaluate(&pt).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_is_a_homomorphism(a in arb_poly(), b in arb_poly(), images in proptest::collection::vec(arb_poly(), 15)) {
        let mut map = BTreeMap::new();
        let mut ident = BTreeMap::new();
        let mut k = 0;
        for i in 1..=5 {
            for j in i + 1..=6 {
                map.insert(VariableId::tau(i, j), images[k].clone());
                ident.insert(VariableId::tau(i, j), Polynomial::tau(i, j));
                k += 1;
            }
        }
        prop_assert_eq!(a.substitute(&ident).unwrap(), a.clone());
        let s = |p: &Polynomial| p.substitute(&map).unwrap();
        prop_assert_eq!(s(&(&a + &b)), s(&a) + s(&b));
        prop_assert_eq!(s(&(&a * &b)), s(&a) * s(&b));
    }

    #[test]
    fn canonical_form_is_order_independent(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        let x = Polynomial::sum([a.clone(), b.clone(), c.clone()]);
        let y = (&c + &a) + &b;
        prop_assert_eq!(&x, &y);
        prop_assert_eq!(x.to_string().parse::<Polynomial>().unwrap(), x);
    }
}
