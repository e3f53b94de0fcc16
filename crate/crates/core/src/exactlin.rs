//! Exact rational linear forms in the Dynkin-label indeterminates `m1..mk`.
//!
//! A [`LinForm`] is `c0 + c1*m1 + ... + ck*mk` with rational coefficients. The
//! labels are always positive integers, which gives a cheap sufficient test for
//! ordering two forms: if every coefficient of `a - b` (constant included) is
//! nonnegative and one is positive, then `a > b` at every admissible label
//! vector. That rule is [`LinForm::cmp_generic`]; it never guesses, it answers
//! [`GenericOrdering::Incomparable`] instead.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Shorthand for the rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Outcome of a comparison that must hold for every label vector with entries >= 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenericOrdering {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl GenericOrdering {
    pub fn to_ordering(self) -> Option<Ordering> {
        match self {
            GenericOrdering::Less => Some(Ordering::Less),
            GenericOrdering::Equal => Some(Ordering::Equal),
            GenericOrdering::Greater => Some(Ordering::Greater),
            GenericOrdering::Incomparable => None,
        }
    }

    pub fn reverse(self) -> Self {
        match self {
            GenericOrdering::Less => GenericOrdering::Greater,
            GenericOrdering::Greater => GenericOrdering::Less,
            other => other,
        }
    }
}

/// `constant + sum_i coeffs[i] * m_{i+1}` over the rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinForm {
    constant: Rational,
    coeffs: Vec<Rational>,
}

impl LinForm {
    pub fn new(constant: Rational, coeffs: Vec<Rational>) -> Self {
        LinForm { constant, coeffs }
    }

    pub fn zero(arity: usize) -> Self {
        LinForm {
            constant: Rational::zero(),
            coeffs: vec![Rational::zero(); arity],
        }
    }

    pub fn constant(arity: usize, value: Rational) -> Self {
        LinForm {
            constant: value,
            coeffs: vec![Rational::zero(); arity],
        }
    }

    /// The bare indeterminate `m_index` (1-based).
    ///
    /// Panics if `index` is outside `1..=arity`.
    pub fn indeterminate(arity: usize, index: usize) -> Self {
        assert!(
            (1..=arity).contains(&index),
            "indeterminate m{index} out of range for arity {arity}"
        );
        let mut f = LinForm::zero(arity);
        f.coeffs[index - 1] = Rational::one();
        f
    }

    pub fn arity(&self) -> usize {
        self.coeffs.len()
    }

    pub fn constant_term(&self) -> &Rational {
        &self.constant
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `m_index` (1-based).
    pub fn coeff(&self, index: usize) -> &Rational {
        &self.coeffs[index - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_arity(&self, other: &LinForm) -> Result<()> {
        if self.arity() == other.arity() {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                left: self.arity(),
                right: other.arity(),
            })
        }
    }

    pub fn try_add(&self, other: &LinForm) -> Result<LinForm> {
        self.check_arity(other)?;
        Ok(LinForm {
            constant: &self.constant + &other.constant,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &LinForm) -> Result<LinForm> {
        self.check_arity(other)?;
        Ok(LinForm {
            constant: &self.constant - &other.constant,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, r: &Rational) -> LinForm {
        LinForm {
            constant: &self.constant * r,
            coeffs: self.coeffs.iter().map(|a| a * r).collect(),
        }
    }

    /// Substitute positive integer labels for the indeterminates.
    pub fn eval_at(&self, labels: &[u64]) -> Result<Rational> {
        if labels.len() != self.arity() {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: labels.len(),
            });
        }
        Ok(self
            .coeffs
            .iter()
            .zip(labels)
            .fold(self.constant.clone(), |acc, (c, &m)| {
                acc + c * Rational::from_integer(BigInt::from(m))
            }))
    }

    /// Coefficient-dominance comparison, valid for all labels `m_i >= 1`.
    pub fn cmp_generic(&self, other: &LinForm) -> Result<GenericOrdering> {
        Ok(self.try_sub(other)?.generic_sign())
    }

    /// [`LinForm::cmp_generic`] against zero.
    pub fn generic_sign(&self) -> GenericOrdering {
        let mut any_pos = false;
        let mut any_neg = false;
        for c in std::iter::once(&self.constant).chain(&self.coeffs) {
            if c.is_positive() {
                any_pos = true;
            } else if c.is_negative() {
                any_neg = true;
            }
        }
        match (any_pos, any_neg) {
            (false, false) => GenericOrdering::Equal,
            (true, false) => GenericOrdering::Greater,
            (false, true) => GenericOrdering::Less,
            (true, true) => GenericOrdering::Incomparable,
        }
    }

    /// True when the form takes a value in {1, 2, 3, ...} at every label
    /// vector with entries >= 1: integer coefficients, none negative, and a
    /// value of at least 1 at the all-ones vector (the minimum).
    pub fn is_positive_integer_valued(&self) -> bool {
        let all = || std::iter::once(&self.constant).chain(&self.coeffs);
        if !all().all(|c| c.is_integer() && !c.is_negative()) {
            return false;
        }
        let at_ones = all().fold(Rational::zero(), |acc, c| acc + c);
        at_ones >= Rational::one()
    }

    /// `Some(i)` when the form is exactly the indeterminate `m_i`.
    pub fn single_indeterminate(&self) -> Option<usize> {
        if !self.constant.is_zero() {
            return None;
        }
        let mut hit = None;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !c.is_one() || hit.is_some() {
                return None;
            }
            hit = Some(i + 1);
        }
        hit
    }

    /// Coefficients with the constant first, the layout used for serialization.
    pub fn coeff_vector(&self) -> Vec<Rational> {
        std::iter::once(self.constant.clone())
            .chain(self.coeffs.iter().cloned())
            .collect()
    }

    /// Inverse of [`LinForm::coeff_vector`].
    pub fn from_coeff_vector(v: &[Rational]) -> Option<LinForm> {
        let (constant, coeffs) = v.split_first()?;
        Some(LinForm::new(constant.clone(), coeffs.to_vec()))
    }
}

impl Add for &LinForm {
    type Output = LinForm;
    fn add(self, rhs: &LinForm) -> LinForm {
        self.try_add(rhs).expect("LinForm arity mismatch")
    }
}

impl Sub for &LinForm {
    type Output = LinForm;
    fn sub(self, rhs: &LinForm) -> LinForm {
        self.try_sub(rhs).expect("LinForm arity mismatch")
    }
}

impl Add for LinForm {
    type Output = LinForm;
    fn add(self, rhs: LinForm) -> LinForm {
        &self + &rhs
    }
}

impl Sub for LinForm {
    type Output = LinForm;
    fn sub(self, rhs: LinForm) -> LinForm {
        &self - &rhs
    }
}

impl Neg for &LinForm {
    type Output = LinForm;
    fn neg(self) -> LinForm {
        LinForm {
            constant: -&self.constant,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LinForm {
    type Output = LinForm;
    fn neg(self) -> LinForm {
        -&self
    }
}

impl Mul<&Rational> for &LinForm {
    type Output = LinForm;
    fn mul(self, rhs: &Rational) -> LinForm {
        self.scale(rhs)
    }
}

/// Canonical text: content and sign pulled out front, so `-x1-x2` over
/// halves prints as `-1/2*(m1+2*m2+...)`. Terms run `m1..mk`, constant last.
impl fmt::Display for LinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_constant() {
            return write!(f, "{}", self.constant);
        }
        // (term name, coefficient) in print order
        let terms: Vec<(Option<usize>, &Rational)> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (Some(i + 1), c))
            .chain(std::iter::once((None, &self.constant)))
            .filter(|(_, c)| !c.is_zero())
            .collect();

        let num_gcd = terms
            .iter()
            .fold(BigInt::zero(), |g, (_, c)| g.gcd(c.numer()));
        let den_lcm = terms
            .iter()
            .fold(BigInt::one(), |l, (_, c)| l.lcm(c.denom()));
        let mut content = Rational::new(num_gcd, den_lcm);
        if terms[0].1.is_negative() {
            content = -content;
        }

        let mut inner = String::new();
        for (k, (name, c)) in terms.iter().enumerate() {
            let a = (*c / &content).to_integer();
            if a.is_negative() {
                inner.push('-');
            } else if k > 0 {
                inner.push('+');
            }
            let mag = a.abs();
            match name {
                Some(i) if mag.is_one() => inner.push_str(&format!("m{i}")),
                Some(i) => inner.push_str(&format!("{mag}*m{i}")),
                None => inner.push_str(&mag.to_string()),
            }
        }

        let single = terms.len() == 1;
        if content.is_one() {
            write!(f, "{inner}")
        } else if (-&content).is_one() {
            if single {
                write!(f, "-{inner}")
            } else {
                write!(f, "-({inner})")
            }
        } else if single {
            write!(f, "{content}*{inner}")
        } else {
            write!(f, "{content}*({inner})")
        }
    }
}
