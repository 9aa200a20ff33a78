//! Spectral radii of nonnegative integer matrices with certified error bounds.
//!
//! The matrix is split into strongly connected components. Components of size
//! one and two get exact values of the form `p + c*sqrt(r)`; larger ones are
//! handled by power iteration with Collatz-Wielandt enclosures on the shifted
//! matrix `A + I`, whose primitivity on an SCC guarantees convergence. The
//! spectral radius of the whole matrix is the maximum over components, and it
//! is reported as exact whenever the winning component is exact and provably
//! dominates every other component's upper bound.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::Rational;

fn big(n: i128) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A real number of the form `rational + coeff * sqrt(radicand)` with
/// `coeff >= 0`, kept normalized: square factors are pulled out of the
/// radicand and a vanishing radical part is folded into the rational part.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraicValue {
    rational: Rational,
    coeff: Rational,
    radicand: u64,
}

impl AlgebraicValue {
    pub fn new(rational: Rational, coeff: Rational, radicand: u64) -> Self {
        assert!(!coeff.is_negative(), "radical coefficient must be >= 0");
        let (rational, coeff, radicand) = normalize(rational, coeff, radicand);
        AlgebraicValue {
            rational,
            coeff,
            radicand,
        }
    }

    pub fn from_integer(n: i64) -> Self {
        AlgebraicValue::new(big(n as i128), Rational::zero(), 0)
    }

    pub fn is_rational(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.rational.to_f64().expect("finite rational");
        let c = self.coeff.to_f64().expect("finite rational");
        r + c * (self.radicand as f64).sqrt()
    }

    /// Exact comparison of two values, no floating point involved.
    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        // Sign of (r1 - r2) + c1*sqrt(d1) - c2*sqrt(d2), coefficients >= 0.
        let a = &self.rational - &other.rational;
        if self.radicand == other.radicand || self.coeff.is_zero() || other.coeff.is_zero() {
            // One radical at most; merge coefficients on the shared radicand.
            let (c, d) = if other.coeff.is_zero() {
                (self.coeff.clone(), self.radicand)
            } else if self.coeff.is_zero() {
                (-other.coeff.clone(), other.radicand)
            } else {
                (&self.coeff - &other.coeff, self.radicand)
            };
            return sign_of_sum(&a, &c, d);
        }
        // B = a + c1*sqrt(d1) is the left side minus the other's rational part.
        let b_sign = sign_of_sum(&a, &self.coeff, self.radicand);
        if b_sign != Ordering::Greater {
            // Subtracting the strictly positive c2*sqrt(d2) keeps it negative.
            return Ordering::Less;
        }
        // Compare B^2 with c2^2 * d2, both sides positive.
        let lhs_const = &a * &a + &self.coeff * &self.coeff * big(self.radicand as i128)
            - &other.coeff * &other.coeff * big(other.radicand as i128);
        let cross = big(2) * &a * &self.coeff;
        sign_of_sum(&lhs_const, &cross, self.radicand)
    }

    /// Human- and machine-readable exact form, e.g. "2", "3/2 + 1/2*sqrt(5)".
    pub fn expression(&self) -> String {
        if self.coeff.is_zero() {
            return format!("{}", self.rational);
        }
        let radical = if self.coeff.is_one() {
            format!("sqrt({})", self.radicand)
        } else {
            format!("{}*sqrt({})", self.coeff, self.radicand)
        };
        if self.rational.is_zero() {
            radical
        } else {
            format!("{} + {}", self.rational, radical)
        }
    }
}

impl fmt::Display for AlgebraicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.expression())
    }
}

/// Sign of `a + c*sqrt(d)` (c may be negative here).
fn sign_of_sum(a: &Rational, c: &Rational, d: u64) -> Ordering {
    if c.is_zero() || d == 0 {
        return a.cmp(&Rational::zero());
    }
    let a_sign = a.cmp(&Rational::zero());
    let radical_sq = c * c * big(d as i128);
    if c.is_positive() {
        match a_sign {
            Ordering::Less => radical_sq.cmp(&(a * a)),
            _ => Ordering::Greater,
        }
    } else {
        match a_sign {
            Ordering::Greater => (a * a).cmp(&radical_sq),
            _ => Ordering::Less,
        }
    }
}

fn normalize(
    mut rational: Rational,
    mut coeff: Rational,
    mut radicand: u64,
) -> (Rational, Rational, u64) {
    if coeff.is_zero() || radicand == 0 {
        return (rational, Rational::zero(), 0);
    }
    // Whole perfect squares first (covers radicands beyond the trial range).
    let s = (radicand as f64).sqrt().round() as u64;
    for t in s.saturating_sub(2)..=s + 2 {
        if (t as u128) * (t as u128) == radicand as u128 {
            rational += &coeff * big(t as i128);
            return (rational, Rational::zero(), 0);
        }
    }
    let mut d = 2u64;
    while d * d <= radicand && d <= 1 << 16 {
        while radicand.is_multiple_of(d * d) {
            radicand /= d * d;
            coeff *= big(d as i128);
        }
        d += 1;
    }
    (rational, coeff, radicand)
}

/// A spectral radius as a certified enclosure: the true value lies within
/// `bound` of `value`, and `exact` carries a closed form when one is known
/// (then `bound` is zero and `value` is its floating-point image).
#[derive(Debug, Clone)]
pub struct SpectralRadius {
    pub value: f64,
    pub bound: f64,
    pub exact: Option<AlgebraicValue>,
}

impl SpectralRadius {
    fn exact(v: AlgebraicValue) -> Self {
        SpectralRadius {
            value: v.to_f64(),
            bound: 0.0,
            exact: Some(v),
        }
    }
}

const MAX_POWER_ITERATIONS: usize = 1_000_000;

/// Spectral radius of a square nonnegative integer matrix, certified to the
/// requested tolerance (exact wherever the component structure allows).
pub fn spectral_radius(m: &[Vec<i64>], tol: f64) -> Result<SpectralRadius> {
    let n = m.len();
    if n == 0 {
        return Err(Error::BadSpectralInput("matrix must be nonempty".into()));
    }
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::BadSpectralInput(format!(
            "matrix must be square, got {n} rows of lengths {:?}",
            m.iter().map(Vec::len).collect::<Vec<_>>()
        )));
    }
    if m.iter().flatten().any(|&e| e < 0) {
        return Err(Error::BadSpectralInput(
            "matrix entries must be nonnegative".into(),
        ));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::BadSpectralInput(format!(
            "tolerance must be positive and finite, got {tol}"
        )));
    }

    let components = strongly_connected_components(m);
    let per_component: Vec<SpectralRadius> = components
        .iter()
        .map(|vs| component_radius(m, vs, tol))
        .collect();
    Ok(max_radius(&per_component))
}

fn component_radius(m: &[Vec<i64>], vs: &[usize], tol: f64) -> SpectralRadius {
    match vs {
        [i] => SpectralRadius::exact(AlgebraicValue::from_integer(m[*i][*i])),
        [i, j] => {
            let (a, b) = (m[*i][*i] as i128, m[*i][*j] as i128);
            let (c, d) = (m[*j][*i] as i128, m[*j][*j] as i128);
            // Perron root of [[a,b],[c,d]]: (a+d)/2 + sqrt((a-d)^2+4bc)/2.
            let radicand = (a - d) * (a - d) + 4 * b * c;
            if let Ok(radicand) = u64::try_from(radicand) {
                SpectralRadius::exact(AlgebraicValue::new(
                    big(a + d) / big(2),
                    Rational::new(BigInt::one(), BigInt::from(2)),
                    radicand,
                ))
            } else {
                power_iteration(m, vs, tol)
            }
        }
        _ => regular_component_radius(m, vs).unwrap_or_else(|| power_iteration(m, vs, tol)),
    }
}

/// Exact radius for a regular component: the submatrix on an SCC is
/// irreducible, so if all row sums (or all column sums) agree, that common
/// sum is the Perron root.
fn regular_component_radius(m: &[Vec<i64>], vs: &[usize]) -> Option<SpectralRadius> {
    let sum = |flip: bool| -> Vec<i64> {
        vs.iter()
            .map(|&i| {
                vs.iter()
                    .map(|&j| if flip { m[j][i] } else { m[i][j] })
                    .sum()
            })
            .collect()
    };
    for flip in [false, true] {
        let sums = sum(flip);
        if sums.iter().all(|&s| s == sums[0]) {
            return Some(SpectralRadius::exact(AlgebraicValue::from_integer(sums[0])));
        }
    }
    None
}

/// Collatz-Wielandt enclosure for `rho` of the submatrix on `vs`, run on the
/// shift `A + I` (primitive on an SCC, so the bounds close geometrically).
fn power_iteration(m: &[Vec<i64>], vs: &[usize], tol: f64) -> SpectralRadius {
    let n = vs.len();
    let b: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| m[vs[i]][vs[j]] as f64 + if i == j { 1.0 } else { 0.0 })
                .collect()
        })
        .collect();
    let mut x = vec![1.0f64; n];
    let mut lower = f64::NEG_INFINITY;
    let mut upper = f64::INFINITY;
    for _ in 0..MAX_POWER_ITERATIONS {
        let y: Vec<f64> = b
            .iter()
            .map(|row| row.iter().zip(&x).map(|(a, v)| a * v).sum())
            .collect();
        // x stays strictly positive: diagonal of b is >= 1.
        let ratios: Vec<f64> = y.iter().zip(&x).map(|(y, x)| y / x).collect();
        let lo = ratios.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = ratios.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        lower = lower.max(lo);
        upper = upper.min(hi);
        if upper - lower <= tol {
            break;
        }
        let scale = y.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        x = y.into_iter().map(|v| v / scale).collect();
    }
    SpectralRadius {
        value: (upper + lower) / 2.0 - 1.0,
        bound: (upper - lower) / 2.0,
        exact: None,
    }
}

/// Maximum of several enclosures. Exact when the largest exact candidate
/// provably dominates every approximate upper bound.
pub fn max_radius(items: &[SpectralRadius]) -> SpectralRadius {
    assert!(!items.is_empty(), "max_radius of an empty list");
    let exact_max = items
        .iter()
        .filter_map(|r| r.exact.as_ref())
        .max_by(|a, b| a.cmp_exact(b));
    if let Some(w) = exact_max {
        let dominates = items.iter().all(|r| match &r.exact {
            Some(e) => w.cmp_exact(e) != Ordering::Less,
            None => w.to_f64() >= r.value + r.bound,
        });
        if dominates {
            return SpectralRadius::exact(w.clone());
        }
    }
    let upper = items
        .iter()
        .map(|r| r.value + r.bound)
        .fold(f64::NEG_INFINITY, f64::max);
    let lower = items
        .iter()
        .map(|r| r.value - r.bound)
        .fold(f64::NEG_INFINITY, f64::max);
    SpectralRadius {
        value: (upper + lower) / 2.0,
        bound: (upper - lower) / 2.0,
        exact: None,
    }
}

/// Tarjan's algorithm on the support digraph (edge i -> j iff m[i][j] > 0).
fn strongly_connected_components(m: &[Vec<i64>]) -> Vec<Vec<usize>> {
    struct State<'a> {
        m: &'a [Vec<i64>],
        index: Vec<Option<usize>>,
        lowlink: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        next_index: usize,
        components: Vec<Vec<usize>>,
    }
    fn visit(s: &mut State, v: usize) {
        s.index[v] = Some(s.next_index);
        s.lowlink[v] = s.next_index;
        s.next_index += 1;
        s.stack.push(v);
        s.on_stack[v] = true;
        for w in 0..s.m.len() {
            if s.m[v][w] <= 0 {
                continue;
            }
            match s.index[w] {
                None => {
                    visit(s, w);
                    s.lowlink[v] = s.lowlink[v].min(s.lowlink[w]);
                }
                Some(iw) if s.on_stack[w] => {
                    s.lowlink[v] = s.lowlink[v].min(iw);
                }
                _ => {}
            }
        }
        if s.lowlink[v] == s.index[v].unwrap() {
            let mut component = Vec::new();
            loop {
                let w = s.stack.pop().unwrap();
                s.on_stack[w] = false;
                component.push(w);
                if w == v {
                    break;
                }
            }
            component.sort_unstable();
            s.components.push(component);
        }
    }
    let n = m.len();
    let mut s = State {
        m,
        index: vec![None; n],
        lowlink: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        next_index: 0,
        components: Vec::new(),
    };
    for v in 0..n {
        if s.index[v].is_none() {
            visit(&mut s, v);
        }
    }
    s.components
}
