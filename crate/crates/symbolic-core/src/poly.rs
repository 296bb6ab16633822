use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Deref, Mul, Neg, Sub};
use std::sync::Arc;

use crate::scalar::{Cyclotomic, Rational, Scalar};
use crate::AlgebraError;

/// Exponent vector of a (Laurent) monomial.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct ExponentVector(pub Vec<i32>);

impl ExponentVector {
    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, o: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i32) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn divides(&self, o: &ExponentVector) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, o: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&o.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn coprime(&self, o: &ExponentVector) -> bool {
        self.0.iter().zip(&o.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Renders as a Laurent monomial, e.g. `Z2*Z3*Z4/Z1`.
    pub fn display_with(&self, names: &[String]) -> String {
        let part = |sign: i32| {
            let mut out = Vec::new();
            for (e, name) in self.0.iter().zip(names) {
                let e = e * sign;
                if e == 1 {
                    out.push(name.clone());
                } else if e > 1 {
                    out.push(format!("{name}^{e}"));
                }
            }
            out.join("*")
        };
        let num = part(1);
        let den = part(-1);
        match (num.is_empty(), den.is_empty()) {
            (true, true) => "1".into(),
            (false, true) => num,
            (true, false) => format!("1/({den})"),
            (false, false) => {
                if den.contains('*') {
                    format!("{num}/({den})")
                } else {
                    format!("{num}/{den}")
                }
            }
        }
    }
}

impl Deref for ExponentVector {
    type Target = [i32];
    fn deref(&self) -> &[i32] {
        &self.0
    }
}

impl From<Vec<i32>> for ExponentVector {
    fn from(v: Vec<i32>) -> Self {
        ExponentVector(v)
    }
}

/// Ordered variable names shared by the polynomials of one ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ring {
    names: Vec<String>,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> RingRef {
        Arc::new(Ring {
            names: names.iter().map(|s| s.as_ref().to_string()).collect(),
        })
    }

    /// `Z1..Zn` followed by the given parameter names.
    pub fn with_params<S: AsRef<str>>(n: usize, params: &[S]) -> RingRef {
        let mut names: Vec<String> = (1..=n).map(|i| format!("Z{i}")).collect();
        names.extend(params.iter().map(|s| s.as_ref().to_string()));
        Arc::new(Ring { names })
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

pub fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || a.names == b.names
}

/// Sparse polynomial keyed by exponent vector. Zero coefficients are never stored.
#[derive(Clone, Debug)]
pub struct Poly<C: Scalar> {
    ring: RingRef,
    terms: BTreeMap<ExponentVector, C>,
}

pub type QPoly = Poly<Rational>;
pub type WPoly = Poly<Cyclotomic>;

impl<C: Scalar> PartialEq for Poly<C> {
    fn eq(&self, o: &Self) -> bool {
        same_ring(&self.ring, &o.ring) && self.terms == o.terms
    }
}

impl<C: Scalar> Eq for Poly<C> {}

impl<C: Scalar> Poly<C> {
    pub fn zero(ring: &RingRef) -> Self {
        Poly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &RingRef, c: C) -> Self {
        Poly::monomial(ring, ExponentVector::zeros(ring.nvars()), c)
    }

    pub fn one(ring: &RingRef) -> Self {
        Poly::constant(ring, C::one())
    }

    pub fn from_int(ring: &RingRef, n: i64) -> Self {
        Poly::constant(ring, C::from_int(n))
    }

    pub fn var(ring: &RingRef, i: usize) -> Self {
        Poly::monomial(ring, ExponentVector::unit(ring.nvars(), i), C::one())
    }

    /// Variable by name; panics when the ring does not contain it.
    pub fn named(ring: &RingRef, name: &str) -> Self {
        let i = ring
            .index_of(name)
            .unwrap_or_else(|| panic!("no variable {name} in ring"));
        Poly::var(ring, i)
    }

    pub fn monomial(ring: &RingRef, e: ExponentVector, c: C) -> Self {
        assert_eq!(e.len(), ring.nvars(), "exponent length mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (ExponentVector, C)>>(ring: &RingRef, it: I) -> Self {
        let mut p = Poly::zero(ring);
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &ExponentVector) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, e: ExponentVector, c: C) {
        assert_eq!(e.len(), self.ring.nvars(), "exponent length mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = v.clone() + &c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.is_one())
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&ExponentVector::zeros(self.ring.nvars()))
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.degree()).max()
    }

    pub fn has_nonnegative_exponents(&self) -> bool {
        self.terms.keys().all(|e| e.is_nonnegative())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|e| e.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|x| x == d),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v.clone() * c))
                .collect(),
        }
    }

    /// Multiply by the monomial c·Z^e.
    pub fn mul_term(&self, e: &ExponentVector, c: &C) -> Self {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.add(e), v.clone() * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Poly::one(&self.ring);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn conj(&self) -> Self {
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v.conj()))
                .collect(),
        }
    }

    pub fn map_coeffs<D: Scalar, F: Fn(&C) -> D>(&self, f: F) -> Poly<D> {
        Poly::from_terms(&self.ring, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    /// Re-express in a ring whose variables include every variable of `self` that occurs.
    pub fn embed(&self, target: &RingRef) -> Result<Self, AlgebraError> {
        if same_ring(&self.ring, target) {
            return Ok(self.clone());
        }
        let names = self.ring.names();
        let mut map = Vec::with_capacity(names.len());
        for name in names {
            map.push(target.index_of(name));
        }
        let mut out = Poly::zero(target);
        for (e, c) in &self.terms {
            let mut ne = vec![0; target.nvars()];
            for (i, &x) in e.iter().enumerate() {
                if x != 0 {
                    match map[i] {
                        Some(j) => ne[j] = x,
                        None => {
                            return Err(AlgebraError::RingMismatch(format!(
                                "variable {} missing from target ring",
                                names[i]
                            )))
                        }
                    }
                }
            }
            out.add_term(ExponentVector(ne), c.clone());
        }
        Ok(out)
    }

    /// Substitute a polynomial (in `target`'s ring) for every variable.
    pub fn substitute(&self, images: &[Poly<C>], target: &RingRef) -> Result<Poly<C>, AlgebraError> {
        if images.len() != self.ring.nvars() {
            return Err(AlgebraError::RingMismatch(format!(
                "substitution needs {} images, got {}",
                self.ring.nvars(),
                images.len()
            )));
        }
        for im in images {
            if !same_ring(im.ring(), target) {
                return Err(AlgebraError::RingMismatch("substitution image ring".into()));
            }
        }
        let mut cache: Vec<Vec<Poly<C>>> = vec![Vec::new(); images.len()];
        let mut out = Poly::zero(target);
        for (e, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (i, &x) in e.iter().enumerate() {
                if x < 0 {
                    return Err(AlgebraError::NegativeExponent);
                }
                if x == 0 {
                    continue;
                }
                let powers = &mut cache[i];
                if powers.is_empty() {
                    powers.push(Poly::one(target));
                }
                while powers.len() <= x as usize {
                    let next = powers.last().unwrap() * &images[i];
                    powers.push(next);
                }
                t = &t * &powers[x as usize];
            }
            out = out + t;
        }
        Ok(out)
    }

    /// Replace selected variables (by index) with polynomials of the same ring.
    pub fn substitute_some(&self, subs: &[(usize, Poly<C>)]) -> Result<Poly<C>, AlgebraError> {
        let ring = self.ring.clone();
        let mut images: Vec<Poly<C>> = (0..ring.nvars()).map(|i| Poly::var(&ring, i)).collect();
        for (i, p) in subs {
            images[*i] = p.clone();
        }
        self.substitute(&images, &ring)
    }

    pub fn eval(&self, point: &[C]) -> Result<C, AlgebraError> {
        if point.len() != self.ring.nvars() {
            return Err(AlgebraError::RingMismatch("evaluation point length".into()));
        }
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e.iter()) {
                if k >= 0 {
                    t = t * &x.pow(k as u32);
                } else {
                    let xi = x.inv().ok_or(AlgebraError::DivisionByZero)?;
                    t = t * &xi.pow((-k) as u32);
                }
            }
            acc = acc + &t;
        }
        Ok(acc)
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Poly::zero(&self.ring);
        for (e, c) in &self.terms {
            let k = e[i];
            if k == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne.0[i] -= 1;
            out.add_term(ne, c.clone() * &C::from_int(k as i64));
        }
        out
    }

    /// Variables that occur with non-zero exponent.
    pub fn support_vars(&self) -> Vec<usize> {
        let n = self.ring.nvars();
        (0..n)
            .filter(|&i| self.terms.keys().any(|e| e[i] != 0))
            .collect()
    }

    /// Collect as a polynomial in the variables `main`, with coefficients that are
    /// polynomials in the remaining variables.
    pub fn collect_by(&self, main: &[usize]) -> BTreeMap<ExponentVector, Poly<C>> {
        let mut out: BTreeMap<ExponentVector, Poly<C>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let key = ExponentVector(main.iter().map(|&i| e[i]).collect());
            let mut rest = e.clone();
            for &i in main {
                rest.0[i] = 0;
            }
            out.entry(key)
                .or_insert_with(|| Poly::zero(&self.ring))
                .add_term(rest, c.clone());
        }
        out
    }
}

impl Poly<Rational> {
    pub fn to_cyclotomic(&self) -> Poly<Cyclotomic> {
        self.map_coeffs(|c| Cyclotomic::from_rational(c.clone()))
    }
}

impl<'a, C: Scalar> Add<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn add(self, o: &'a Poly<C>) -> Poly<C> {
        assert!(same_ring(&self.ring, &o.ring), "ring mismatch in addition");
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<C: Scalar> Add for Poly<C> {
    type Output = Poly<C>;
    fn add(self, o: Poly<C>) -> Poly<C> {
        assert!(same_ring(&self.ring, &o.ring), "ring mismatch in addition");
        let (mut big, small) = if self.len() >= o.len() { (self, o) } else { (o, self) };
        for (e, c) in small.terms {
            big.add_term(e, c);
        }
        big
    }
}

impl<'a, C: Scalar> Sub<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn sub(self, o: &'a Poly<C>) -> Poly<C> {
        assert!(same_ring(&self.ring, &o.ring), "ring mismatch in subtraction");
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<C: Scalar> Sub for Poly<C> {
    type Output = Poly<C>;
    fn sub(self, o: Poly<C>) -> Poly<C> {
        &self - &o
    }
}

impl<C: Scalar> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly {
            ring: self.ring,
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<'a, C: Scalar> Neg for &'a Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -(self.clone())
    }
}

impl<'a, C: Scalar> Mul<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn mul(self, o: &'a Poly<C>) -> Poly<C> {
        assert!(same_ring(&self.ring, &o.ring), "ring mismatch in multiplication");
        let mut acc: std::collections::HashMap<ExponentVector, C> =
            std::collections::HashMap::with_capacity(self.len() * o.len());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = e1.add(e2);
                let prod = c1.clone() * c2;
                match acc.get_mut(&e) {
                    Some(v) => *v = v.clone() + &prod,
                    None => {
                        acc.insert(e, prod);
                    }
                }
            }
        }
        Poly {
            ring: self.ring.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl<C: Scalar> Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, o: Poly<C>) -> Poly<C> {
        &self * &o
    }
}

impl<C: Scalar> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.ring.names();
        let mut first = true;
        // highest total degree first, then reverse key order, for readability
        let mut keys: Vec<&ExponentVector> = self.terms.keys().collect();
        keys.sort_by(|a, b| b.degree().cmp(&a.degree()).then_with(|| b.cmp(a)));
        for e in keys {
            let c = &self.terms[e];
            let (neg, mag) = match c.as_rational() {
                Some(q) if q < Rational::from_int(0) => (true, C::from_rational(-q)),
                _ => (false, c.clone()),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mono = e.display_with(names);
            if e.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}
