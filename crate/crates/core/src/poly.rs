//! Dense univariate polynomials over the rationals, the target `K[X]`.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::scalar::{factorial, Scalar};

/// Coefficients in ascending degree; the leading coefficient is nonzero
/// unless the polynomial is zero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Polynomial::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Polynomial { coeffs: vec![c] }.normalized()
    }

    pub fn x() -> Self {
        Polynomial {
            coeffs: vec![Scalar::zero(), Scalar::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
        Polynomial { coeffs }.normalized()
    }

    fn normalized(mut self) -> Self {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_monic(&self) -> bool {
        matches!(self.coeffs.last(), Some(c) if c.is_one())
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| c.clone() * factor).collect(),
        }
        .normalized()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Self) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Polynomial { coeffs }.normalized()
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Self) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Polynomial { coeffs }.normalized()
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Self) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a.clone() * b.clone();
            }
        }
        Polynomial { coeffs }.normalized()
    }
}

/// The falling-factorial polynomial `X(X-1)…(X-n+1)/n!`.
pub fn hilbert_poly(n: usize) -> Polynomial {
    let mut p = Polynomial::one();
    for i in 0..n {
        let shift = Polynomial::from_coeffs(vec![-Scalar::from_integer(i.into()), Scalar::one()]);
        p = &p * &shift;
    }
    p.scale(&(Scalar::one() / factorial(n)))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let neg = c < &Scalar::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            if k > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if k == 1 {
                    write!(f, "X")?;
                } else {
                    write!(f, "X^{k}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    #[test]
    fn hilbert_small() {
        assert_eq!(hilbert_poly(0), Polynomial::one());
        assert_eq!(hilbert_poly(1), Polynomial::x());
        // H_2 = (X^2 - X)/2
        assert_eq!(
            hilbert_poly(2),
            Polynomial::from_coeffs(vec![int(0), frac(-1, 2), frac(1, 2)])
        );
    }

    #[test]
    fn two_h2_plus_h1_is_x_squared() {
        let lhs = &hilbert_poly(2).scale(&int(2)) + &hilbert_poly(1);
        assert_eq!(lhs, &Polynomial::x() * &Polynomial::x());
    }

    #[test]
    fn eval_matches_falling_factorial() {
        let h3 = hilbert_poly(3);
        assert_eq!(h3.eval(&int(5)), int(10)); // C(5,3)
        assert_eq!(h3.eval(&int(2)), int(0));
    }

    #[test]
    fn display_formats() {
        assert_eq!(hilbert_poly(2).to_string(), "1/2*X^2 - 1/2*X");
        assert_eq!(Polynomial::x().to_string(), "X");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::one().to_string(), "1");
        let p = &(&Polynomial::x() * &Polynomial::x()) - &Polynomial::one();
        assert_eq!(p.to_string(), "X^2 - 1");
    }
}
