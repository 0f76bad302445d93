//! Storage for expansion coefficients `alpha_n^{(l)}(m)` and eigenvalue series.

use super::couplings::Couplings;
use crate::seriescore::{QSeries, Scalar};

/// Which normalization the coefficients obey.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// `alpha^{(0)}(n) = 1` and `alpha^{(l)}(n) = 0` for `l >= 1`; eigenvalue series nontrivial.
    I,
    /// `alpha^{(0)}(n) = 1` only; the eigenvalue series is the constant `E^{(0)}`.
    II,
}

/// Lowest `m` stored at order `l` for target order `order`.
///
/// Assembling `P^{(j)}` needs `alpha^{(l-j')}(m)` down to `m = -j'`, and the
/// recursion at order `l` reaches back by at most `l - l'` into order `l'`.
/// Both are covered by `min(n, 0) - (order - l)`, which is therefore closed
/// under the recursion.
pub fn window_lo(n: i64, order: usize, l: usize) -> i64 {
    n.min(0) - (order - l) as i64
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoeffTable<S> {
    n: i64,
    order: usize,
    tag: Normalization,
    couplings: Couplings<S>,
    rows: Vec<Vec<S>>,
}

impl<S: Scalar> CoeffTable<S> {
    /// Zero table with the standard windows `[window_lo, n + l]`.
    pub fn zeros(n: i64, order: usize, tag: Normalization, couplings: Couplings<S>) -> Self {
        let rows = (0..=order)
            .map(|l| vec![S::zero(); (n + l as i64 - window_lo(n, order, l) + 1) as usize])
            .collect();
        CoeffTable {
            n,
            order,
            tag,
            couplings,
            rows,
        }
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn tag(&self) -> Normalization {
        self.tag
    }

    pub fn couplings(&self) -> &Couplings<S> {
        &self.couplings
    }

    /// Inclusive `m` range stored at order `l`.
    pub fn window(&self, l: usize) -> (i64, i64) {
        (window_lo(self.n, self.order, l), self.n + l as i64)
    }

    pub fn contains(&self, l: usize, m: i64) -> bool {
        let (lo, hi) = self.window(l);
        l <= self.order && m >= lo && m <= hi
    }

    /// Stored entry, or `None` outside the window (`m > n + l` is identically zero).
    pub fn get(&self, l: usize, m: i64) -> Option<&S> {
        if !self.contains(l, m) {
            return None;
        }
        let (lo, _) = self.window(l);
        Some(&self.rows[l][(m - lo) as usize])
    }

    /// Entry with the support rule applied: zero for `m > n + l`.
    ///
    /// Panics below the window, which would indicate a recursion reaching
    /// outside its closure.
    pub fn value(&self, l: usize, m: i64) -> S {
        let (lo, hi) = self.window(l);
        if m > hi {
            return S::zero();
        }
        assert!(m >= lo, "alpha^({l})({m}) lies below the stored window");
        self.rows[l][(m - lo) as usize].clone()
    }

    pub fn set(&mut self, l: usize, m: i64, v: S) {
        let (lo, hi) = self.window(l);
        assert!(m >= lo && m <= hi, "alpha^({l})({m}) outside the window");
        self.rows[l][(m - lo) as usize] = v;
    }

    /// `alpha(m)` as a q-series, zero at orders where `m` is outside the window.
    pub fn series_at(&self, m: i64) -> QSeries<S> {
        let c = (0..=self.order)
            .map(|l| self.get(l, m).cloned().unwrap_or_else(S::zero))
            .collect();
        QSeries::from_coeffs(c, self.order)
    }

    /// All stored `(l, m, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, i64, &S)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(l, row)| {
            let lo = window_lo(self.n, self.order, l);
            row.iter().enumerate().map(move |(i, v)| (l, lo + i as i64, v))
        })
    }

    /// Largest deviation over the entries both tables hold, up to order `upto`.
    pub fn max_abs_diff(&self, other: &Self, upto: usize) -> f64 {
        self.entries()
            .filter(|(l, m, _)| *l <= upto && other.contains(*l, *m))
            .map(|(l, m, v)| (v.clone() - other.value(l, m)).modulus())
            .fold(0.0, f64::max)
    }

    /// The table of `C(q) psi` for a series `C` with unit constant term:
    /// every `alpha(m)` is multiplied by `C`.
    pub fn gauge(&self, c: &QSeries<S>) -> crate::error::Result<Self> {
        if c.order() != self.order {
            return Err(crate::error::HeunError::OrderMismatch(c.order(), self.order));
        }
        if !c.coeff(0).is_unit_value() {
            return Err(crate::error::HeunError::NonUnit);
        }
        let mut out = self.clone();
        for l in 0..=self.order {
            let (lo, hi) = self.window(l);
            for m in lo..=hi {
                let v = (0..=l).fold(S::zero(), |acc, j| {
                    acc + self.value(j, m) * c.coeff(l - j).clone()
                });
                out.set(l, m, v);
            }
        }
        Ok(out)
    }

    /// Exact (or toleranced) agreement over shared entries up to order `upto`.
    pub fn agrees_with(&self, other: &Self, upto: usize) -> bool {
        self.entries()
            .filter(|(l, m, _)| *l <= upto && other.contains(*l, *m))
            .all(|(l, m, v)| v.approx_eq(&other.value(l, m)))
    }
}

/// Eigenvalue coefficients `E^{(l)}`; the constant term is `(n + (g0+g1)/2)^2`.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenSeries<S> {
    pub series: QSeries<S>,
}

impl<S: Scalar> EigenSeries<S> {
    pub fn new(series: QSeries<S>) -> Self {
        EigenSeries { series }
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    pub fn coeff(&self, l: usize) -> &S {
        self.series.coeff(l)
    }

    pub fn constant(&self) -> &S {
        self.series.coeff(0)
    }

    pub fn coeffs(&self) -> &[S] {
        self.series.coeffs()
    }
}
