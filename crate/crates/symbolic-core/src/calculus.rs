//! Rational functions, formal derivatives and Jacobian determinants.

use crate::linalg;
use crate::poly::{Poly, RingRef};
use crate::scalar::Scalar;
use crate::AlgebraError;

/// Formal quotient num/den; never normalized by a gcd.
#[derive(Clone, Debug)]
pub struct RationalFunction<C: Scalar> {
    pub num: Poly<C>,
    pub den: Poly<C>,
}

impl<C: Scalar> RationalFunction<C> {
    pub fn new(num: Poly<C>, den: Poly<C>) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn poly(p: Poly<C>) -> Self {
        let den = Poly::one(p.ring());
        RationalFunction { num: p, den }
    }

    pub fn ring(&self) -> &RingRef {
        self.num.ring()
    }

    /// Quotient rule.
    pub fn derivative(&self, i: usize) -> Self {
        let num = &(&self.num.derivative(i) * &self.den) - &(&self.num * &self.den.derivative(i));
        RationalFunction {
            num,
            den: &self.den * &self.den,
        }
    }

    /// ∂/∂x_i at `point`, by the quotient rule on values; avoids expanding products.
    pub fn derivative_at(&self, i: usize, point: &[C]) -> Result<C, AlgebraError> {
        let d = self.den.eval(point)?;
        let di = d.inv().ok_or(AlgebraError::DivisionByZero)?;
        let n = self.num.eval(point)?;
        let top = self.num.derivative(i).eval(point)? * &d - n * &self.den.derivative(i).eval(point)?;
        Ok(top * &di * &di)
    }

    pub fn eval(&self, point: &[C]) -> Result<C, AlgebraError> {
        let d = self.den.eval(point)?;
        let di = d.inv().ok_or(AlgebraError::DivisionByZero)?;
        Ok(self.num.eval(point)? * &di)
    }

    /// Same function: n₁·d₂ = n₂·d₁.
    pub fn equals(&self, other: &Self) -> bool {
        (&(&self.num * &other.den) - &(&other.num * &self.den)).is_zero()
    }

    /// Substitute rational functions (over `target`) for the variables of this ring.
    pub fn substitute(&self, images: &[RationalFunction<C>], target: &RingRef) -> Result<Self, AlgebraError> {
        let n = self.ring().nvars();
        if images.len() != n {
            return Err(AlgebraError::RingMismatch("substitution arity".into()));
        }
        // clear denominators with ∏ d_i^{D_i}, D_i = max degree of variable i in num and den
        let maxdeg: Vec<i32> = (0..n)
            .map(|i| {
                self.num
                    .terms()
                    .chain(self.den.terms())
                    .map(|(e, _)| e[i])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        if self.num.terms().chain(self.den.terms()).any(|(e, _)| !e.is_nonnegative()) {
            return Err(AlgebraError::NegativeExponent);
        }
        let homog = |p: &Poly<C>| -> Poly<C> {
            let mut out = Poly::zero(target);
            for (e, c) in p.terms() {
                let mut t = Poly::constant(target, c.clone());
                for i in 0..n {
                    if maxdeg[i] == 0 {
                        continue;
                    }
                    t = &t * &images[i].num.pow(e[i] as u32);
                    t = &t * &images[i].den.pow((maxdeg[i] - e[i]) as u32);
                }
                out = out + t;
            }
            out
        };
        RationalFunction::new(homog(&self.num), homog(&self.den))
    }
}

/// det(∂f_i/∂x_{vars[j]}) at `point` (a full point of the functions' ring).
pub fn jacobian_determinant<C: Scalar>(
    fns: &[RationalFunction<C>],
    vars: &[usize],
    point: &[C],
) -> Result<C, AlgebraError> {
    if fns.len() != vars.len() {
        return Err(AlgebraError::Dimension(format!(
            "{} functions of {} variables",
            fns.len(),
            vars.len()
        )));
    }
    let mut m = Vec::with_capacity(fns.len());
    for f in fns {
        let mut row = Vec::with_capacity(vars.len());
        for &v in vars {
            row.push(f.derivative_at(v, point)?);
        }
        m.push(row);
    }
    linalg::det(&m)
}
