use super::*;
use crate::oracle::{diagonal_expand, series_solve};
use crate::poly::{CurveSpec, MultiPoly};
use proptest::prelude::*;

fn ring(p: u64, a: u32) -> RingSpec {
    RingSpec::new(p, a).unwrap()
}

fn curve(expr: &str, p: u64, a: u32) -> CurveSpec {
    CurveSpec::parse(expr, ring(p, a)).unwrap()
}

fn built(expr: &str, p: u64, a: u32) -> Automaton {
    build_algebraic(&curve(expr, p, a), &BuildOptions::default()).unwrap()
}

fn same_sequence(a: &Automaton, b: &Automaton, n: u128) {
    for k in 0..n {
        assert_eq!(a.eval(k), b.eval(k), "n = {k}");
    }
}

#[test]
fn small_table_counts() {
    assert_eq!(built("(x+1)*y+x", 2, 2).len(), 6);
    assert_eq!(built("(x+1)*y+x", 2, 3).len(), 10);
    assert_eq!(built("(4*x+1)*y+x", 3, 2).len(), 14);
}

#[test]
fn agrees_with_newton_solution() {
    for (e, p, a) in [
        ("x*y^2+(x+1)*y+x", 2, 3),
        ("(x+2)*y^2+(x+1)*y+x", 2, 2),
        ("(x+4)*y^2+y+x", 3, 2),
    ] {
        let c = curve(e, p, a);
        let aut = build_algebraic(&c, &BuildOptions::default()).unwrap();
        let s = series_solve(&c, 600);
        for (n, v) in s.coeffs.iter().enumerate() {
            assert_eq!(aut.eval(n as u128), *v, "{e} at n = {n}");
        }
    }
}

#[test]
fn motzkin_values() {
    let a = built("x*y^2+(x+1)*y+x", 2, 3);
    assert_eq!(a.eval(0), 0);
    assert_eq!(a.eval(5), 7);
    assert!(a.is_leading_zero_insensitive());
    assert_eq!(a.eval_word(&[1, 0, 1, 0, 0]), 7);
}

#[test]
fn minimization() {
    let a = built("(x+1)*y+x", 2, 1);
    let m = minimize(&a);
    assert_eq!(m.len(), 2);
    same_sequence(&a, &m, 512);
    let big = built("(x+4)*y^2+y+x", 3, 2);
    let m = minimize(&big);
    assert_eq!(minimize(&m), m);
    assert_eq!(minimize_hopcroft(&big), m);
    same_sequence(&big, &m, 3000);
}

#[test]
fn reciprocal_diagonal() {
    let r = ring(2, 1);
    let num = MultiPoly::parse_in("1", 2, 2).unwrap();
    let den = MultiPoly::parse_in("1-x-y", 2, 2).unwrap();
    let spec = DiagonalSpec::new(&num, &den, &r).unwrap();
    let a = build_diagonal(&spec, &r, &BuildOptions::default()).unwrap();
    assert_eq!(minimize(&a).len(), 2);

    let r4 = ring(2, 2);
    let spec = DiagonalSpec::new(&num, &MultiPoly::parse_in("1-x-y", 2, 4).unwrap(), &r4).unwrap();
    let a = build_diagonal(&spec, &r4, &BuildOptions::default()).unwrap();
    assert_eq!(
        (0..4).map(|n| a.eval(n)).collect::<Vec<_>>(),
        vec![1, 2, 2, 0]
    );
    let direct = build_diagonal_direct(&spec, &r4, &BuildOptions::default()).unwrap();
    same_sequence(&a, &direct, 1024);
    let lattice = diagonal_expand(&spec, 200, &r4).unwrap();
    for (n, v) in lattice.coeffs.iter().enumerate() {
        assert_eq!(a.eval(n as u128), *v);
    }
}

#[test]
fn three_variable_diagonal() {
    let r = ring(2, 2);
    let num = MultiPoly::parse_in("1", 3, 4).unwrap();
    let den = MultiPoly::parse_in("1-x-y-z", 3, 4).unwrap();
    let spec = DiagonalSpec::new(&num, &den, &r).unwrap();
    let a = build_diagonal(&spec, &r, &BuildOptions::default()).unwrap();
    let lattice = diagonal_expand(&spec, 60, &r).unwrap();
    for (n, v) in lattice.coeffs.iter().enumerate() {
        assert_eq!(a.eval(n as u128), *v);
    }
}

#[test]
fn invalid_denominator() {
    let r = ring(3, 1);
    let num = MultiPoly::parse_in("1", 2, 3).unwrap();
    let den = MultiPoly::parse_in("3+x+y", 2, 3).unwrap();
    assert!(matches!(
        DiagonalSpec::new(&num, &den, &r),
        Err(crate::Error::InvalidDenominator(_))
    ));
}

#[test]
fn shear_diagonal_matches_curve() {
    for (e, p, a) in [
        ("x*y^2+(x+1)*y+x", 2, 2),
        ("(x+1)*y+x", 2, 3),
        ("(x+4)*y^2+y+x", 3, 1),
    ] {
        let c = curve(e, p, a);
        let alg = build_algebraic(&c, &BuildOptions::default()).unwrap();
        let spec = DiagonalSpec::shear_of(&c).unwrap();
        let diag = build_diagonal(&spec, &c.ring, &BuildOptions::default()).unwrap();
        same_sequence(&alg, &diag, 729);
    }
}

#[test]
fn expanded_states_match_digits() {
    for (e, p, a) in [
        ("x*y^2+(x+1)*y+x", 2, 3),
        ("(3*x^2+x+1)*y+x^2", 2, 2),
        ("(4*x+1)*y+x", 3, 2),
    ] {
        let c = curve(e, p, a);
        let digits = build_algebraic(&c, &BuildOptions::default()).unwrap();
        let expanded = build_algebraic_expanded(&c, &BuildOptions::default()).unwrap();
        assert_eq!(digits.len(), expanded.len(), "{e}");
        assert_eq!(digits.next, expanded.next);
        assert_eq!(digits.outputs, expanded.outputs);
    }
}

#[test]
fn worker_count_does_not_change_numbering() {
    let c = curve("(x+4)*y^2+y+x", 3, 2);
    let one = build_algebraic(
        &c,
        &BuildOptions {
            workers: Some(1),
            ..Default::default()
        },
    )
    .unwrap();
    let four = build_algebraic(
        &c,
        &BuildOptions {
            workers: Some(4),
            ..Default::default()
        },
    )
    .unwrap();
    assert_eq!(one, four);
}

#[test]
fn state_budget() {
    let c = curve("(x+4)*y^2+y+x", 3, 2);
    let err = build_algebraic(
        &c,
        &BuildOptions {
            state_budget: 20,
            ..Default::default()
        },
    )
    .unwrap_err();
    assert!(matches!(
        err,
        crate::Error::BudgetExceeded { what: "state", .. }
    ));
}

#[test]
fn json_roundtrip() {
    let a = built("(x+1)*y+x", 2, 2);
    let text = to_json(&a);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["states"].as_array().unwrap().len(), 6);
    assert_eq!(from_json(&text).unwrap(), a);
    let m = minimize(&a);
    assert_eq!(from_json(&to_json(&m)).unwrap(), m);
    assert!(from_json("{\"version\": 1}").is_err());
}

#[test]
fn dot_export() {
    let a = Automaton {
        ring: ring(2, 1),
        source: String::new(),
        next: vec![0, 0],
        outputs: vec![1],
        keys: None,
    };
    let dot = to_dot(&a);
    assert!(dot.contains("q0 [label=\"1\", shape=doublecircle]"));
    assert_eq!(dot.matches("->").count(), 2);
    assert!(matches!(
        serialize(&a, "xml"),
        Err(crate::Error::UnsupportedFormat(_))
    ));
}

fn arb_automaton() -> impl Strategy<Value = Automaton> {
    (2u64..4, 1usize..12).prop_flat_map(|(p, n)| {
        (
            prop::collection::vec(0..n, n * p as usize),
            prop::collection::vec(0u64..3, n),
        )
            .prop_map(move |(next, outputs)| Automaton {
                ring: RingSpec::new(p, 1).unwrap(),
                source: String::new(),
                next,
                outputs,
                keys: None,
            })
    })
}

proptest! {
    #[test]
    fn minimizers_agree(a in arb_automaton()) {
        let m = minimize(&a);
        prop_assert_eq!(&minimize_hopcroft(&a), &m);
        prop_assert_eq!(&minimize(&m), &m);
        prop_assert!(m.len() <= a.len());
        for n in 0..200u128 {
            prop_assert_eq!(a.eval(n), m.eval(n));
        }
    }
}
