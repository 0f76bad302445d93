//! Jacobi and Gegenbauer polynomials as exact coefficient vectors.

use crate::error::{HeunError, Result};
use crate::seriescore::{pochhammer, Module, Scalar, ZPoly};
use num_traits::Zero;

fn factorial<S: Scalar>(k: usize) -> S {
    (1..=k).fold(S::unit(), |a, j| a * S::from_i64(j as i64))
}

/// `P_n^{(α,β)}(z) = Σ_l (n+α+β+1)_l (α+l+1)_{n-l} / (l!(n-l)!) ((z-1)/2)^l`.
pub fn jacobi_poly<S: Scalar>(n: i64, alpha: &S, beta: &S) -> Result<ZPoly<S>> {
    if n < 0 {
        return Err(HeunError::pre(format!("Jacobi degree {n} is negative")));
    }
    let n_us = n as usize;
    let half = S::from_ratio(1, 2);
    let base = ZPoly::from_coeffs(vec![-half.clone(), half]);
    let s = S::from_i64(n + 1) + alpha.clone() + beta.clone();
    let mut acc = ZPoly::zero();
    let mut pow = ZPoly::constant(S::unit());
    for l in 0..=n_us {
        let c = pochhammer(&s, l as i64)?
            * pochhammer(&(alpha.clone() + S::from_i64(l as i64 + 1)), (n_us - l) as i64)?
            * (factorial::<S>(l) * factorial::<S>(n_us - l)).try_inv()?;
        acc = acc + pow.scale(&c);
        pow = pow * base.clone();
    }
    Ok(acc)
}

/// `C_n^{(λ)} = (2λ)_n / (λ+1/2)_n · P_n^{(λ-1/2, λ-1/2)}`.
pub fn gegenbauer<S: Scalar>(n: i64, lambda: &S) -> Result<ZPoly<S>> {
    let a = lambda.clone() - S::from_ratio(1, 2);
    let den = pochhammer(&(lambda.clone() + S::from_ratio(1, 2)), n.max(0))?;
    let inv = den.try_inv().map_err(|_| {
        HeunError::pre("(λ+1/2)_n vanishes; use the explicit Gegenbauer sum")
    })?;
    let num = pochhammer(&(lambda.clone() * S::from_i64(2)), n.max(0))?;
    Ok(jacobi_poly(n, &a, &a)?.scale(&(num * inv)))
}

/// `C_n^{(λ)}(z) = Σ_k (-1)^k (λ)_{n-k} / (k!(n-2k)!) (2z)^{n-2k}`, valid for every `λ`.
pub fn gegenbauer_explicit<S: Scalar>(n: usize, lambda: &S) -> ZPoly<S> {
    let mut c = vec![S::zero(); n + 1];
    for k in 0..=n / 2 {
        let p = n - 2 * k;
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let coef = pochhammer(lambda, (n - k) as i64).expect("non-negative order")
            * S::from_i64(sign)
            * S::from_i64(2).pow_u(p as u32)
            * (factorial::<S>(k) * factorial::<S>(p))
                .try_inv()
                .expect("factorials are nonzero");
        c[p] = coef;
    }
    ZPoly::from_coeffs(c)
}
