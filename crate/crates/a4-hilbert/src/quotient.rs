//! Finite-dimensional quotients ℚ(ω)[Z]/I through a Gröbner basis.

use symbolic_core::{
    buchberger, linalg, normal_form, standard_monomials, Cyclotomic, ExponentVector, MonomialOrder, Scalar, WPoly,
};

use crate::group::{act, Mat3};
use crate::A4Error;

/// A Gröbner basis, with no finiteness requirement.
#[derive(Clone, Debug)]
pub struct GroebnerIdeal {
    pub gb: Vec<WPoly>,
    pub order: MonomialOrder,
}

impl GroebnerIdeal {
    pub fn new(gens: &[WPoly], order: MonomialOrder) -> Result<Self, A4Error> {
        Ok(GroebnerIdeal {
            gb: buchberger(gens, &order)?,
            order,
        })
    }

    pub fn reduce(&self, p: &WPoly) -> Result<WPoly, A4Error> {
        Ok(normal_form(p, &self.gb, &self.order)?)
    }
}

#[derive(Clone, Debug)]
pub struct Quotient {
    pub gb: Vec<WPoly>,
    pub order: MonomialOrder,
    /// standard monomials, sorted
    pub basis: Vec<ExponentVector>,
}

impl Quotient {
    pub fn new(gens: &[WPoly], order: MonomialOrder) -> Result<Self, A4Error> {
        let gb = buchberger(gens, &order)?;
        let mut basis = standard_monomials(&gb, &order)
            .ok_or_else(|| A4Error::Structure("quotient is infinite-dimensional".into()))?;
        basis.sort();
        Ok(Quotient { gb, order, basis })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn reduce(&self, p: &WPoly) -> Result<WPoly, A4Error> {
        Ok(normal_form(p, &self.gb, &self.order)?)
    }

    pub fn contains(&self, p: &WPoly) -> Result<bool, A4Error> {
        Ok(self.reduce(p)?.is_zero())
    }

    /// Coefficients of the normal form on the standard monomials.
    pub fn coords(&self, p: &WPoly) -> Result<Vec<Cyclotomic>, A4Error> {
        let r = self.reduce(p)?;
        Ok(self.basis.iter().map(|e| r.coeff(e)).collect())
    }

    pub fn rank(&self, polys: &[WPoly]) -> Result<usize, A4Error> {
        if polys.is_empty() {
            return Ok(0);
        }
        let rows = polys.iter().map(|p| self.coords(p)).collect::<Result<Vec<_>, _>>()?;
        Ok(linalg::rank(&rows))
    }

    /// Dimension of each graded piece of the quotient (the ideal must be homogeneous).
    pub fn dims_by_degree(&self) -> Vec<usize> {
        let top = self.basis.iter().map(|e| e.degree()).max().unwrap_or(0);
        (0..=top)
            .map(|d| self.basis.iter().filter(|e| e.degree() == d).count())
            .collect()
    }

    /// tr(P ↦ P(AZ)) on the quotient; the ideal must be stable under A.
    pub fn trace(&self, a: &Mat3) -> Result<Cyclotomic, A4Error> {
        let ring = self.gb.first().map(|g| g.ring().clone()).ok_or_else(|| A4Error::Structure("empty basis".into()))?;
        let mut t = Cyclotomic::zero();
        for e in &self.basis {
            let m = WPoly::monomial(&ring, e.clone(), Cyclotomic::one());
            t = t + self.reduce(&act(&m, a)?)?.coeff(e);
        }
        Ok(t)
    }
}

/// Coefficients c with Σ cⱼ·colsⱼ = target, when the columns are independent.
pub fn express(cols: &[Vec<Cyclotomic>], target: &[Cyclotomic]) -> Option<Vec<Cyclotomic>> {
    let n = target.len();
    let k = cols.len();
    let m: Vec<Vec<Cyclotomic>> = (0..n)
        .map(|i| {
            let mut row: Vec<Cyclotomic> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(-target[i].clone());
            row
        })
        .collect();
    let kernel = linalg::nullspace(&m);
    let v = kernel.into_iter().find(|v| !v[k].is_zero())?;
    let s = v[k].inv()?;
    Some(v[..k].iter().map(|x| x.clone() * &s).collect())
}
