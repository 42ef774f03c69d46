//! Dense truncated power series over `Z/m`.

use crate::modarith::{add_mod, inv_mod_u64, mul_mod, sub_mod};

const KARATSUBA_CUTOFF: usize = 48;

fn schoolbook(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    if m <= 1 << 32 {
        let mut acc = vec![0u128; out.len()];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                acc[i + j] += (x * y) as u128;
            }
        }
        for (o, v) in out.iter_mut().zip(acc) {
            *o = (v % m as u128) as u64;
        }
    } else {
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = add_mod(out[i + j], mul_mod(x, y, m), m);
            }
        }
    }
    out
}

fn add_into(dst: &mut [u64], src: &[u64], m: u64) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d = add_mod(*d, *s, m);
    }
}

fn sub_into(dst: &mut [u64], src: &[u64], m: u64) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d = sub_mod(*d, *s, m);
    }
}

/// Full product of two coefficient vectors mod `m`.
pub fn multiply(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    if a.len().min(b.len()) <= KARATSUBA_CUTOFF {
        return schoolbook(a, b, m);
    }
    let half = a.len().max(b.len()).div_ceil(2);
    let split = |v: &[u64]| -> (Vec<u64>, Vec<u64>) {
        if v.len() <= half {
            (v.to_vec(), Vec::new())
        } else {
            (v[..half].to_vec(), v[half..].to_vec())
        }
    };
    let (a0, a1) = split(a);
    let (b0, b1) = split(b);
    let z0 = multiply(&a0, &b0, m);
    let z2 = multiply(&a1, &b1, m);
    let mut sa = a0.clone();
    sa.resize(half, 0);
    add_into(&mut sa, &a1, m);
    let mut sb = b0.clone();
    sb.resize(half, 0);
    add_into(&mut sb, &b1, m);
    let mut z1 = multiply(&sa, &sb, m);
    sub_into(&mut z1, &z0, m);
    sub_into(&mut z1, &z2, m);
    let mut out = vec![0u64; a.len() + b.len() - 1];
    add_into(&mut out, &z0, m);
    add_into(&mut out[half..], &z1, m);
    if !z2.is_empty() {
        add_into(&mut out[2 * half..], &z2, m);
    }
    out
}

/// Product truncated to `n` coefficients.
pub fn mul_trunc(a: &[u64], b: &[u64], n: usize, m: u64) -> Vec<u64> {
    let a = &a[..a.len().min(n)];
    let b = &b[..b.len().min(n)];
    let mut out = multiply(a, b, m);
    out.resize(n, 0);
    out
}

/// `1/f mod x^n`; `f[0]` must be a unit.
pub fn inverse(f: &[u64], n: usize, m: u64) -> Vec<u64> {
    let c = inv_mod_u64(f[0], m).expect("series constant term must be a unit");
    let mut g = vec![c];
    let mut k = 1;
    while k < n {
        k = (2 * k).min(n);
        // g <- g (2 - f g)
        let fg = mul_trunc(f, &g, k, m);
        let mut corr: Vec<u64> = fg.iter().map(|&v| sub_mod(0, v, m)).collect();
        corr[0] = add_mod(corr[0], 2 % m, m);
        g = mul_trunc(&g, &corr, k, m);
    }
    g.resize(n, 0);
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn karatsuba_matches_schoolbook(
            a in prop::collection::vec(0u64..1000, 0..300),
            b in prop::collection::vec(0u64..1000, 0..300),
            big in any::<bool>(),
        ) {
            let m = if big { (1 << 62) + 11 } else { 1000 };
            prop_assert_eq!(multiply(&a, &b, m), schoolbook(&a, &b, m));
        }

        #[test]
        fn inverse_is_inverse(f in prop::collection::vec(0u64..27, 1..80), n in 1usize..120) {
            let mut f = f;
            if f[0] % 3 == 0 { f[0] += 1; }
            let g = inverse(&f, n, 27);
            let prod = mul_trunc(&f, &g, n, 27);
            prop_assert_eq!(prod[0], 1);
            prop_assert!(prod[1..].iter().all(|&v| v == 0));
        }
    }
}
