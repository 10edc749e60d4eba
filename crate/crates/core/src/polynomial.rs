//! Integer-valued polynomials in the binomial basis `p_h(x) = x(x−1)…(x−h+1)/h!`
//! and the polynomial `n ↦ f^(n−k,λ)`.
//!
//! For `λ ⊢ k` the dimension of the shape `(n−k, λ)` is a degree-`k`
//! polynomial in `n`. Writing it as `Σ_h b_h p_h(n)`, the coefficients are
//! integers, `b_h = 0` for `h < k − ℓ(λ)`, and the signed top coefficients
//! `a_h = (−1)^h b_{k−h}` (for `0 ≤ h ≤ ℓ(λ)`) are positive and count the
//! tableaux of `SYT_{h,0}(λ)`.

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableau::{count_restricted, dimension_hook, RestrictionWindow};

/// `p_h(n)` for any integer `n`.
///
/// For `n ≥ 0` this is the binomial coefficient; negative arguments are
/// reflected through `p_h(n) = (−1)^h p_h(h−1−n)`.
pub fn binomial(n: i64, h: i64) -> Result<BigInt> {
    if h < 0 {
        return Err(Error::NegativeOrder(h));
    }
    Ok(binomial_big(&BigInt::from(n), h as usize))
}

pub(crate) fn binomial_big(n: &BigInt, h: usize) -> BigInt {
    if n.is_negative() {
        let reflected = BigInt::from(h) - 1 - n;
        let value = binomial_big(&reflected, h);
        return if h.is_multiple_of(2) { value } else { -value };
    }
    if *n < BigInt::from(h) {
        return BigInt::zero();
    }
    // each partial product of i+1 consecutive integers is divisible by (i+1)!
    let mut acc = BigInt::one();
    for i in 0..h {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `f^(n−k,λ)`, the number of standard tableaux of `λ` with a first row of
/// length `n − k` put in front.
pub fn eval_f_large(shape: &Partition, n: usize) -> Result<BigUint> {
    dimension_hook(&shape.prepend_row(n)?)
}

/// Coefficients `(b_0, …, b_k)` over the basis `{p_h}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BinomialPolynomial {
    #[serde(
        rename = "b",
        serialize_with = "crate::json::serialize_ints",
        deserialize_with = "crate::json::deserialize_ints"
    )]
    coeffs: Vec<BigInt>,
}

impl BinomialPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        BinomialPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Index of the last basis element; `coeffs().len() - 1`.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// `Σ_h b_h p_h(n)`, exact for any integer `n`.
    pub fn evaluate(&self, n: i64) -> BigInt {
        let n = BigInt::from(n);
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, b)| !b.is_zero())
            .map(|(h, b)| b * binomial_big(&n, h))
            .sum()
    }

    /// `a_h = (−1)^h b_{k−h}` for `0 ≤ h ≤ k`, the coefficient of
    /// `(−1)^h binom(n, k−h)`.
    pub fn signed_top_coefficient(&self, h: usize) -> BigInt {
        let k = self.degree();
        assert!(h <= k, "index {h} exceeds degree {k}");
        let b = self.coeffs[k - h].clone();
        if h.is_multiple_of(2) {
            b
        } else {
            -b
        }
    }
}

/// The positive coefficients `a_{λ,0}, …, a_{λ,ℓ(λ)}` of
/// `f^(n−k,λ) = Σ_h (−1)^h a_{λ,h} binom(n, k−h)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoefficientVector {
    pub lambda: Partition,
    #[serde(
        serialize_with = "crate::json::serialize_ints",
        deserialize_with = "crate::json::deserialize_ints"
    )]
    pub a: Vec<BigInt>,
}

impl CoefficientVector {
    /// `a_{λ,h}`, extended by zero above `ℓ(λ)`.
    pub fn get(&self, h: usize) -> BigInt {
        self.a.get(h).cloned().unwrap_or_default()
    }

    /// `Σ_h (−1)^h a_h binom(n, k−h)`.
    pub fn evaluate(&self, n: i64) -> BigInt {
        let k = self.lambda.weight();
        let n = BigInt::from(n);
        self.a
            .iter()
            .enumerate()
            .map(|(h, a)| {
                let term = a * binomial_big(&n, k - h);
                if h % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum()
    }
}

/// Sample points `M, M+1, …, M+k` with `M = k + λ_1`, the first `n` for
/// which `(n−k, λ)` is a partition.
fn sample_values(shape: &Partition) -> Result<(usize, Vec<BigInt>)> {
    let k = shape.weight();
    let start = k + shape.first();
    let values = (start..=start + k)
        .map(|n| eval_f_large(shape, n).map(BigInt::from))
        .collect::<Result<Vec<_>>>()?;
    Ok((start, values))
}

fn check_vanishing(shape: &Partition, coeffs: &[BigInt]) -> Result<()> {
    let vanishing = shape.weight() - shape.len();
    if let Some((index, value)) = coeffs[..vanishing]
        .iter()
        .enumerate()
        .find(|(_, b)| !b.is_zero())
    {
        return Err(Error::VanishingViolation {
            shape: shape.to_string(),
            index,
            value: value.to_string(),
        });
    }
    Ok(())
}

/// The unique `(b_0, …, b_k)` with `f^(n−k,λ) = Σ_h b_h binom(n, h)`.
///
/// Evaluates at `n = M, …, M+k` (`M = k + λ_1`), takes forward differences
/// `Δ^h p(M)`, and solves the unit upper-triangular system
/// `Δ^h p(M) = Σ_{j ≥ h} b_j binom(M, j−h)` from `h = k` downwards.
pub fn fit_binomial_coefficients(shape: &Partition) -> Result<BinomialPolynomial> {
    let k = shape.weight();
    let (start, mut row) = sample_values(shape)?;

    let mut differences = Vec::with_capacity(k + 1);
    for _ in 0..=k {
        differences.push(row[0].clone());
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }

    let start = BigInt::from(start);
    let shifts: Vec<BigInt> = (0..=k).map(|d| binomial_big(&start, d)).collect();
    let mut coeffs = vec![BigInt::zero(); k + 1];
    for h in (0..=k).rev() {
        let tail: BigInt = (h + 1..=k).map(|j| &coeffs[j] * &shifts[j - h]).sum();
        coeffs[h] = &differences[h] - tail;
    }

    check_vanishing(shape, &coeffs)?;
    Ok(BinomialPolynomial { coeffs })
}

/// Independent route to the same coefficients: Newton divided differences
/// over the rationals, evaluated back at `0, …, k`, then `b_h = Δ^h p(0)`.
pub fn fit_by_newton(shape: &Partition) -> Result<BinomialPolynomial> {
    let k = shape.weight();
    let (start, values) = sample_values(shape)?;
    let nodes: Vec<BigRational> = (start..=start + k)
        .map(|x| BigRational::from_integer(BigInt::from(x)))
        .collect();

    let mut table: Vec<BigRational> = values.into_iter().map(BigRational::from_integer).collect();
    for order in 1..=k {
        for i in (order..=k).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (&nodes[i] - &nodes[i - order]);
        }
    }

    let newton_at = |x: &BigRational| {
        table
            .iter()
            .enumerate()
            .rev()
            .fold(BigRational::zero(), |acc, (j, c)| acc * (x - &nodes[j]) + c)
    };

    let low_values = (0..=k)
        .map(|m| {
            let value = newton_at(&BigRational::from_integer(BigInt::from(m)));
            if value.is_integer() {
                Ok(value.to_integer())
            } else {
                Err(Error::IntegralityViolation(shape.to_string()))
            }
        })
        .collect::<Result<Vec<_>>>()?;

    let coeffs: Vec<BigInt> = (0..=k)
        .map(|h| {
            (0..=h)
                .map(|j| {
                    let term = binomial_big(&BigInt::from(h), j) * &low_values[j];
                    if (h - j) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect();

    check_vanishing(shape, &coeffs)?;
    Ok(BinomialPolynomial { coeffs })
}

/// `(a_{λ,0}, …, a_{λ,ℓ(λ)})` with `a_{λ,h} = (−1)^h b_{λ,k−h}`.
pub fn a_coefficients(shape: &Partition) -> Result<CoefficientVector> {
    let poly = fit_binomial_coefficients(shape)?;
    let a: Vec<BigInt> = (0..=shape.len())
        .map(|h| poly.signed_top_coefficient(h))
        .collect();
    if let Some((index, value)) = a.iter().enumerate().find(|(_, a)| a.sign() != Sign::Plus) {
        return Err(Error::PositivityViolation {
            shape: shape.to_string(),
            index,
            value: value.to_string(),
        });
    }
    Ok(CoefficientVector {
        lambda: shape.clone(),
        a,
    })
}

/// `f^λ` recovered from the first row: with `μ = (λ_2, …, λ_ℓ)` and `m = |μ|`,
/// `f^λ = Σ_{h=0}^{ℓ(μ)} (−1)^h f_h^μ binom(k, m−h)`.
///
/// This is the signed expansion of `f^(n−m,μ)` evaluated at `n = k`, so the
/// binomial index is `m − h`. Writing it as `binom(k, k−h)` instead gives
/// 5 rather than 16 for `λ = (3,2,1)`.
pub fn dimension_via_mu_identity(shape: &Partition) -> Result<BigInt> {
    let k = shape.weight() as i64;
    let mu = shape.tail();
    let m = mu.weight();
    let mut total = BigInt::zero();
    for h in 0..=mu.len() {
        let count = BigInt::from(count_restricted(&mu, RestrictionWindow::new(h, 0))?);
        let term = count * binomial(k, (m - h) as i64)?;
        if h % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}
