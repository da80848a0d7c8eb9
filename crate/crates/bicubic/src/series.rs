//! Exact counting series.
//!
//! `f_n` counts rooted bicubic planar maps on `2n` vertices and `g_n` rooted
//! primitive ones. They are tied by `F(x) = G(x (1 + F(x))^3)`, which
//! inverts to a Bell transform:
//!
//! ```text
//! g_n = Σ_{k=1}^{n} C(-3n, k-1) (k-1)!/n! · B_{n,k}(1! f_1, 2! f_2, ...)
//! ```
//!
//! where `C(-3n, k-1) = Π_{i=0}^{k-2} (-3n - i) / (k-1)!`.
//! Everything here is exact big-integer or big-rational arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("index must be at least 1, got {0}")]
    IndexTooSmall(u32),
    #[error("need 1 <= k <= n, got n = {n}, k = {k}")]
    BadBellIndex { n: usize, k: usize },
    #[error("need {need} arguments, got {have}")]
    NotEnoughArguments { need: usize, have: usize },
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `f_n = 3 (2n-1)! 2^n / ((n-1)! (n+2)!)`.
pub fn f_closed(n: u32) -> Result<BigInt, SeriesError> {
    if n < 1 {
        return Err(SeriesError::IndexTooSmall(n));
    }
    let num = BigInt::from(3) * factorial(2 * n - 1) * (BigInt::one() << n);
    let den = factorial(n - 1) * factorial(n + 2);
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    Ok(q)
}

/// `f_1 ..= f_n`.
pub fn f_sequence(n: u32) -> Vec<BigInt> {
    (1..=n).map(|i| f_closed(i).expect("i >= 1")).collect()
}

/// Partial Bell polynomials `B_{n,k}` evaluated at fixed arguments, for all
/// `0 <= k <= n <= max_n`.
#[derive(Clone, Debug)]
pub struct BellTable {
    rows: Vec<Vec<BigRational>>,
}

impl BellTable {
    /// `args[i - 1]` is `x_i`; needs `args.len() >= max_n`.
    pub fn new(args: &[BigRational], max_n: usize) -> Result<Self, SeriesError> {
        if args.len() < max_n {
            return Err(SeriesError::NotEnoughArguments { need: max_n, have: args.len() });
        }
        let binom = binomials(max_n);
        let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let mut row = vec![BigRational::zero(); n + 1];
            if n == 0 {
                row[0] = BigRational::one();
            }
            for k in 1..=n {
                // B_{n,k} = Σ_i C(n-1, i-1) x_i B_{n-i,k-1}
                let mut s = BigRational::zero();
                for i in 1..=n - k + 1 {
                    let prev = &rows[n - i];
                    if k - 1 < prev.len() && !prev[k - 1].is_zero() {
                        s += BigRational::from_integer(binom[n - 1][i - 1].clone()) * &args[i - 1] * &prev[k - 1];
                    }
                }
                row[k] = s;
            }
            rows.push(row);
        }
        Ok(BellTable { rows })
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&BigRational> {
        self.rows.get(n).and_then(|r| r.get(k))
    }
}

fn binomials(n: usize) -> Vec<Vec<BigInt>> {
    let mut c = vec![vec![BigInt::one()]];
    for i in 1..=n {
        let prev = &c[i - 1];
        let mut row = vec![BigInt::one(); i + 1];
        for j in 1..i {
            row[j] = &prev[j - 1] + &prev[j];
        }
        c.push(row);
    }
    c
}

/// Single partial Bell value `B_{n,k}(x_1, x_2, ...)`.
pub fn partial_bell(n: usize, k: usize, args: &[BigRational]) -> Result<BigRational, SeriesError> {
    if k < 1 || k > n {
        return Err(SeriesError::BadBellIndex { n, k });
    }
    let need = n - k + 1;
    if args.len() < need {
        return Err(SeriesError::NotEnoughArguments { need, have: args.len() });
    }
    let mut padded = args.to_vec();
    padded.resize(n, BigRational::zero());
    let table = BellTable::new(&padded, n)?;
    Ok(table.get(n, k).expect("in range").clone())
}

/// `g_1 ..= g_n` through the Bell transform of `f`.
pub fn g_sequence(n: u32) -> Vec<BigInt> {
    let n = n as usize;
    let args: Vec<BigRational> = (1..=n as u32)
        .map(|i| BigRational::from_integer(factorial(i) * f_closed(i).expect("i >= 1")))
        .collect();
    let table = BellTable::new(&args, n).expect("enough arguments");
    (1..=n).map(|m| g_from_table(m, &table)).collect()
}

fn g_from_table(n: usize, table: &BellTable) -> BigInt {
    let three_n = BigInt::from(3 * n as u64);
    let n_fact = BigRational::from_integer(factorial(n as u32));
    let mut sum = BigRational::zero();
    // falling product Π_{i=0}^{k-2} (-3n - i); the (k-1)! cancels
    let mut falling = BigInt::one();
    for k in 1..=n {
        if k >= 2 {
            falling *= -(&three_n) - BigInt::from(k as u64 - 2);
        }
        let b = table.get(n, k).expect("in range");
        sum += BigRational::from_integer(falling.clone()) * b / &n_fact;
    }
    assert!(sum.is_integer(), "g_{n} must be an integer, got {sum}");
    sum.to_integer()
}

/// `g_n` by the Bell transform.
pub fn g_bell(n: u32) -> Result<BigInt, SeriesError> {
    if n < 1 {
        return Err(SeriesError::IndexTooSmall(n));
    }
    Ok(g_sequence(n).pop().expect("n >= 1"))
}

/// Power series truncated after `x^order`, with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSeries {
    coeffs: Vec<BigRational>,
}

impl ExactSeries {
    /// `coeffs[i]` is the coefficient of `x^i`; padded or cut to `order`.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        ExactSeries { coeffs }
    }

    pub fn from_integers(coeffs: &[BigInt], order: usize) -> Self {
        ExactSeries::new(coeffs.iter().cloned().map(BigRational::from_integer).collect(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        ExactSeries::new(vec![c], order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        ExactSeries::new(vec![BigRational::zero(), BigRational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn add(&self, other: &ExactSeries) -> ExactSeries {
        let order = self.order().min(other.order());
        let c = (0..=order).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect();
        ExactSeries::new(c, order)
    }

    pub fn mul(&self, other: &ExactSeries) -> ExactSeries {
        let order = self.order().min(other.order());
        let mut c = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                c[i + j] += a * b;
            }
        }
        ExactSeries::new(c, order)
    }

    pub fn pow(&self, k: u32) -> ExactSeries {
        let mut out = ExactSeries::constant(BigRational::one(), self.order());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// `self(inner)`, Horner style; `inner` must have zero constant term.
    pub fn compose(&self, inner: &ExactSeries) -> ExactSeries {
        assert!(inner.coeffs[0].is_zero(), "inner series needs a zero constant term");
        let order = self.order().min(inner.order());
        let mut out = ExactSeries::constant(self.coeffs[order].clone(), order);
        for i in (0..order).rev() {
            out = out.mul(inner).add(&ExactSeries::constant(self.coeffs[i].clone(), order));
        }
        out
    }
}

/// Checks `F = G(x (1 + F)^3)` coefficient by coefficient up to `order`.
pub fn verify_functional_equation(order: usize) -> bool {
    let mut f = vec![BigInt::zero()];
    f.extend(f_sequence(order as u32));
    let mut g = vec![BigInt::zero()];
    g.extend(g_sequence(order as u32));
    let f = ExactSeries::from_integers(&f, order);
    let g = ExactSeries::from_integers(&g, order);
    let one_plus_f = f.add(&ExactSeries::constant(BigRational::one(), order));
    let inner = ExactSeries::x(order).mul(&one_plus_f.pow(3));
    let rhs = g.compose(&inner);
    (1..=order).all(|i| f.coeff(i) == rhs.coeff(i))
}

/// Converts a small non-negative big integer (for counts in tests and CLI).
pub fn to_u64(x: &BigInt) -> Option<u64> {
    if x.is_negative() {
        None
    } else {
        x.to_u64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|x| x.to_i64().unwrap()).collect()
    }

    #[test]
    fn f_values() {
        assert_eq!(ints(&f_sequence(10)), vec![1, 3, 12, 56, 288, 1584, 9152, 54912, 339456, 2149888]);
        assert!(f_closed(0).is_err());
    }

    #[test]
    fn g_values() {
        assert_eq!(
            ints(&g_sequence(15)),
            vec![1, 0, 0, 1, 0, 3, 7, 15, 63, 168, 561, 1881, 6110, 21087, 72174]
        );
        assert_eq!(g_bell(9).unwrap(), BigInt::from(63));
        assert!(g_bell(0).is_err());
    }

    #[test]
    fn functional_equation_holds() {
        assert!(verify_functional_equation(1));
        assert!(verify_functional_equation(10));
        assert!(verify_functional_equation(15));
    }

    #[test]
    fn bell_bad_indices() {
        let x = vec![BigRational::one(); 3];
        assert!(partial_bell(3, 0, &x).is_err());
        assert!(partial_bell(3, 4, &x).is_err());
        assert!(partial_bell(5, 1, &x).is_err());
    }

    #[test]
    fn series_compose_small() {
        // (1 + y)^2 at y = x + x^2: 1 + 2x + 3x^2 + 2x^3 + x^4
        let one = BigRational::one;
        let g = ExactSeries::new(vec![one(), BigRational::from_integer(2.into()), one()], 4);
        let y = ExactSeries::new(vec![BigRational::zero(), one(), one()], 4);
        let c: Vec<i64> = g.compose(&y).coeffs().iter().map(|r| r.to_integer().to_i64().unwrap()).collect();
        assert_eq!(c, vec![1, 2, 3, 2, 1]);
    }
}
