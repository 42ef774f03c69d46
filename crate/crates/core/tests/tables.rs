//! Known automaton and orbit sizes, reproduced end to end.

use padic_automata::analysis::{bound_report, orbit_zero, DEFAULT_ORBIT_BUDGET};
use padic_automata::automaton::{build_algebraic, minimize, BuildOptions};
use padic_automata::numeration::{initial_digits, make_q, Section, ZTable};
use padic_automata::oracle::{kernel_prefixes, series_solve, SeriesPrefix};
use padic_automata::poly::CurveSpec;
use padic_automata::RingSpec;

const SIZES: [(&str, u64, u32, usize); 7] = [
    ("(x+1)*y+x", 2, 2, 6),
    ("(3*x^2+x+1)*y+x^2", 2, 2, 18),
    ("(x^3+x+1)*y+x^3", 2, 2, 70),
    ("(x+2)*y^2+(x+1)*y+x", 2, 2, 18),
    ("(x+1)*y+x", 2, 3, 10),
    ("(4*x+1)*y+x", 3, 2, 14),
    ("(x+4)*y^2+y+x", 3, 2, 171),
];

const ORBITS: [(&str, u64, u32, usize); 5] = [
    ("y+x", 2, 2, 2),
    ("x*y^2+(x+1)*y+x", 2, 2, 4),
    ("x^2*y^2+(x^2+x+1)*y+x^2", 2, 2, 11),
    ("x^2*y^2+(x^2+x+1)*y+x^2", 2, 3, 20),
    ("(x^3+x+1)*y^2+(x^3+1)*y+x^3", 2, 2, 25),
];

fn curve(e: &str, p: u64, a: u32) -> CurveSpec {
    CurveSpec::parse(e, RingSpec::new(p, a).unwrap()).unwrap()
}

fn orbit_size(c: &CurveSpec) -> usize {
    let zt = ZTable::new(&make_q(c), &c.ring, Section::Algebraic);
    orbit_zero(&initial_digits(c), &zt, DEFAULT_ORBIT_BUDGET)
        .unwrap()
        .size()
}

#[test]
fn automaton_sizes() {
    for (e, p, a, n) in SIZES {
        let c = curve(e, p, a);
        let aut = build_algebraic(&c, &BuildOptions::default()).unwrap();
        assert_eq!(aut.len(), n, "{e} mod {p}^{a}");
        assert!(num_bigint::BigUint::from(n) <= bound_report(&c).unwrap().total);
    }
}

#[test]
fn orbit_sizes() {
    for (e, p, a, n) in ORBITS {
        assert_eq!(orbit_size(&curve(e, p, a)), n, "{e} mod {p}^{a}");
    }
}

#[test]
fn automata_agree_with_newton() {
    for (e, p, a, _) in SIZES.iter().chain(ORBITS.iter()) {
        let c = curve(e, *p, *a);
        let aut = build_algebraic(&c, &BuildOptions::default()).unwrap();
        let oracle = series_solve(&c, 1999);
        assert_eq!(
            SeriesPrefix::from_automaton(&aut, 1999).coeffs,
            oracle.coeffs,
            "{e}"
        );
    }
}

/// Kernel prefixes are a lower bound that reaches the minimized size once
/// `e_max` covers the automaton depth.
#[test]
fn kernel_prefixes_reach_minimized_size() {
    let e_max = [8, 8, 8, 8, 8, 5, 7];
    for ((e, p, a, _), em) in SIZES.iter().zip(e_max) {
        let c = curve(e, *p, *a);
        let m = minimize(&build_algebraic(&c, &BuildOptions::default()).unwrap());
        let seq = series_solve(&c, (*p as usize).pow(em) * 64).coeffs;
        for lower in 1..em.min(4) {
            assert!(kernel_prefixes(&seq, *p, lower, 64).unwrap() <= m.len());
        }
        assert_eq!(kernel_prefixes(&seq, *p, em, 64).unwrap(), m.len(), "{e}");
    }
}
