//! Division, Buchberger and standard monomials.
//!
//! Internally a polynomial is a map from order key to (exponent, coefficient).
//! Keys are linear in the exponent (see `MonomialOrder::key`), so multiplying
//! by a monomial just adds keys.

use std::collections::{BTreeMap, HashSet, VecDeque};

use crate::order::MonomialOrder;
use crate::poly::{same_ring, ExponentVector, Poly, RingRef};
use crate::scalar::Scalar;
use crate::AlgebraError;

pub const DEFAULT_SPAIR_BUDGET: usize = 1_000_000;

/// S-pair budget: `HILB_MAX_SPAIRS` when set and parseable, otherwise 10⁶.
pub fn spair_budget() -> usize {
    std::env::var("HILB_MAX_SPAIRS")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SPAIR_BUDGET)
}

type Work<C> = BTreeMap<Vec<i32>, (Vec<i32>, C)>;

#[derive(Clone, Debug)]
struct GPoly<C> {
    // descending by key; first entry is the leading term, coefficient 1 once monic
    terms: Vec<(Vec<i32>, Vec<i32>, C)>,
}

impl<C: Scalar> GPoly<C> {
    fn lead_key(&self) -> &[i32] {
        &self.terms[0].0
    }
    fn lead_exp(&self) -> &[i32] {
        &self.terms[0].1
    }
    fn from_work(w: Work<C>) -> Self {
        GPoly {
            terms: w.into_iter().rev().map(|(k, (e, c))| (k, e, c)).collect(),
        }
    }
    fn monic(mut self) -> Self {
        let inv = self.terms[0].2.inv().expect("leading coefficient is non-zero");
        for t in &mut self.terms {
            t.2 = t.2.clone() * &inv;
        }
        self
    }
}

fn divides(a: &[i32], b: &[i32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

fn coprime(a: &[i32], b: &[i32]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x == 0 || y == 0)
}

fn sub_vec(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add_vec(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn work_add<C: Scalar>(w: &mut Work<C>, key: Vec<i32>, exp: Vec<i32>, c: C) {
    if c.is_zero() {
        return;
    }
    match w.get_mut(&key) {
        Some(slot) => {
            let s = slot.1.clone() + &c;
            if s.is_zero() {
                w.remove(&key);
            } else {
                slot.1 = s;
            }
        }
        None => {
            w.insert(key, (exp, c));
        }
    }
}

/// Subtract q·X^m·g from w, skipping g's leading term (caller removed it).
fn sub_multiple<C: Scalar>(w: &mut Work<C>, g: &GPoly<C>, mkey: &[i32], mexp: &[i32], q: &C) {
    for (k, e, c) in g.terms.iter().skip(1) {
        work_add(w, add_vec(k, mkey), add_vec(e, mexp), -(c.clone() * q));
    }
}

/// Full reduction of w by the basis; returns the remainder.
fn reduce<C: Scalar>(mut w: Work<C>, basis: &[&GPoly<C>]) -> Work<C> {
    let mut rem: Work<C> = BTreeMap::new();
    while let Some((k, (e, c))) = w.pop_last() {
        let hit = basis.iter().find(|g| divides(g.lead_exp(), &e));
        match hit {
            Some(g) => {
                let q = c * &g.terms[0].2.inv().expect("non-zero leading coefficient");
                let mkey = sub_vec(&k, g.lead_key());
                let mexp = sub_vec(&e, g.lead_exp());
                sub_multiple(&mut w, g, &mkey, &mexp, &q);
            }
            None => {
                rem.insert(k, (e, c));
            }
        }
    }
    rem
}

fn check_input<C: Scalar>(polys: &[Poly<C>], ring: &RingRef, order: &MonomialOrder) -> Result<(), AlgebraError> {
    if order.nvars() != ring.nvars() {
        return Err(AlgebraError::RingMismatch(format!(
            "order on {} variables, ring has {}",
            order.nvars(),
            ring.nvars()
        )));
    }
    for p in polys {
        if !same_ring(p.ring(), ring) {
            return Err(AlgebraError::RingMismatch("polynomials from different rings".into()));
        }
        if !p.has_nonnegative_exponents() {
            return Err(AlgebraError::NegativeExponent);
        }
    }
    Ok(())
}

fn to_work<C: Scalar>(p: &Poly<C>, order: &MonomialOrder) -> Work<C> {
    p.terms()
        .map(|(e, c)| (order.key(e), (e.0.clone(), c.clone())))
        .collect()
}

fn from_work<C: Scalar>(w: Work<C>, ring: &RingRef) -> Poly<C> {
    Poly::from_terms(ring, w.into_values().map(|(e, c)| (ExponentVector(e), c)))
}

fn to_gpoly<C: Scalar>(p: &Poly<C>, order: &MonomialOrder) -> Option<GPoly<C>> {
    if p.is_zero() {
        None
    } else {
        Some(GPoly::from_work(to_work(p, order)))
    }
}

/// Leading exponent of p under the order; `None` for the zero polynomial.
pub fn leading_exponent<C: Scalar>(p: &Poly<C>, order: &MonomialOrder) -> Option<ExponentVector> {
    p.terms()
        .max_by(|a, b| order.cmp(a.0, b.0))
        .map(|(e, _)| e.clone())
}

/// Remainder of p on division by `basis`, trying basis elements in the given order.
pub fn normal_form<C: Scalar>(
    p: &Poly<C>,
    basis: &[Poly<C>],
    order: &MonomialOrder,
) -> Result<Poly<C>, AlgebraError> {
    if basis.is_empty() {
        return Err(AlgebraError::EmptyBasis);
    }
    let ring = p.ring().clone();
    check_input(std::slice::from_ref(p), &ring, order)?;
    check_input(basis, &ring, order)?;
    let gs: Vec<GPoly<C>> = basis.iter().filter_map(|b| to_gpoly(b, order)).collect();
    let refs: Vec<&GPoly<C>> = gs.iter().collect();
    Ok(from_work(reduce(to_work(p, order), &refs), &ring))
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Vec<i32>,
    key: Vec<i32>,
}

/// Gebauer–Möller update with a new basis element `h` (index into `store`).
fn update<C: Scalar>(
    store: &[GPoly<C>],
    active: &mut Vec<usize>,
    pairs: &mut Vec<Pair>,
    h: usize,
    order: &MonomialOrder,
) {
    let th = store[h].lead_exp().to_vec();
    let mut c: Vec<(usize, Vec<i32>)> = active
        .iter()
        .map(|&g| (g, lcm(&th, store[g].lead_exp())))
        .collect();
    let mut d: Vec<(usize, Vec<i32>)> = Vec::new();
    while let Some((g1, l1)) = c.pop() {
        let disjoint = coprime(&th, store[g1].lead_exp());
        let dominated = c.iter().chain(d.iter()).any(|(_, l2)| divides(l2, &l1));
        if disjoint || !dominated {
            d.push((g1, l1));
        }
    }
    let e: Vec<(usize, Vec<i32>)> = d
        .into_iter()
        .filter(|(g, _)| !coprime(&th, store[*g].lead_exp()))
        .collect();
    pairs.retain(|p| {
        let ti = store[p.i].lead_exp();
        let tj = store[p.j].lead_exp();
        !(divides(&th, &p.lcm) && lcm(ti, &th) != p.lcm && lcm(tj, &th) != p.lcm)
    });
    for (g, l) in e {
        let key = order.key(&l);
        pairs.push(Pair { i: g, j: h, lcm: l, key });
    }
    active.retain(|&g| !divides(&th, store[g].lead_exp()));
    active.push(h);
}

fn spoly<C: Scalar>(a: &GPoly<C>, b: &GPoly<C>, l: &[i32], order: &MonomialOrder) -> Work<C> {
    let lkey = order.key(l);
    let mut w: Work<C> = BTreeMap::new();
    let ma = sub_vec(l, a.lead_exp());
    let mka = sub_vec(&lkey, a.lead_key());
    for (k, e, c) in a.terms.iter().skip(1) {
        work_add(&mut w, add_vec(k, &mka), add_vec(e, &ma), c.clone());
    }
    let mb = sub_vec(l, b.lead_exp());
    let mkb = sub_vec(&lkey, b.lead_key());
    for (k, e, c) in b.terms.iter().skip(1) {
        work_add(&mut w, add_vec(k, &mkb), add_vec(e, &mb), -c.clone());
    }
    w
}

/// Reduced Gröbner basis with the default S-pair budget.
pub fn buchberger<C: Scalar>(gens: &[Poly<C>], order: &MonomialOrder) -> Result<Vec<Poly<C>>, AlgebraError> {
    buchberger_with_budget(gens, order, spair_budget())
}

/// Reduced, monic Gröbner basis sorted by increasing leading term. Aborts with
/// `BudgetExceeded` after `budget` S-pair reductions.
pub fn buchberger_with_budget<C: Scalar>(
    gens: &[Poly<C>],
    order: &MonomialOrder,
    budget: usize,
) -> Result<Vec<Poly<C>>, AlgebraError> {
    let ring = match gens.first() {
        Some(g) => g.ring().clone(),
        None => return Ok(Vec::new()),
    };
    check_input(gens, &ring, order)?;
    let mut store: Vec<GPoly<C>> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    for g in gens {
        if let Some(gp) = to_gpoly(g, order) {
            store.push(gp.monic());
            let h = store.len() - 1;
            update(&store, &mut active, &mut pairs, h, order);
        }
    }
    let mut processed = 0usize;
    while !pairs.is_empty() {
        // normal strategy: smallest lcm first
        let (idx, _) = pairs
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.key.cmp(&b.1.key))
            .expect("non-empty");
        let p = pairs.swap_remove(idx);
        processed += 1;
        if processed > budget {
            return Err(AlgebraError::BudgetExceeded(budget));
        }
        let s = spoly(&store[p.i], &store[p.j], &p.lcm, order);
        let refs: Vec<&GPoly<C>> = active.iter().map(|&g| &store[g]).collect();
        let r = reduce(s, &refs);
        if !r.is_empty() {
            store.push(GPoly::from_work(r).monic());
            let h = store.len() - 1;
            update(&store, &mut active, &mut pairs, h, order);
        }
    }
    // minimal basis, then tail reduction
    let mut mins: Vec<usize> = active.clone();
    mins.sort_by(|&a, &b| store[a].lead_key().cmp(store[b].lead_key()));
    mins.dedup_by(|a, b| store[*a].lead_exp() == store[*b].lead_exp());
    let keep: Vec<usize> = mins
        .iter()
        .copied()
        .filter(|&g| {
            !mins
                .iter()
                .any(|&o| o != g && divides(store[o].lead_exp(), store[g].lead_exp()))
        })
        .collect();
    let mut out = Vec::with_capacity(keep.len());
    for &g in &keep {
        let others: Vec<&GPoly<C>> = keep.iter().filter(|&&o| o != g).map(|&o| &store[o]).collect();
        let lead = store[g].terms[0].clone();
        let mut tail: Work<C> = BTreeMap::new();
        for (k, e, c) in store[g].terms.iter().skip(1) {
            tail.insert(k.clone(), (e.clone(), c.clone()));
        }
        let mut w = reduce(tail, &others);
        w.insert(lead.0, (lead.1, lead.2));
        out.push(from_work(w, &ring));
    }
    Ok(out)
}

/// Membership test against a Gröbner basis.
pub fn ideal_contains<C: Scalar>(gb: &[Poly<C>], p: &Poly<C>, order: &MonomialOrder) -> Result<bool, AlgebraError> {
    if p.is_zero() {
        return Ok(true);
    }
    if gb.is_empty() {
        return Ok(false);
    }
    Ok(normal_form(p, gb, order)?.is_zero())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Colength {
    Finite(usize),
    Infinite,
}

/// Monomials outside the leading-term ideal of `gb`, or `None` when that set is infinite.
pub fn standard_monomials<C: Scalar>(gb: &[Poly<C>], order: &MonomialOrder) -> Option<Vec<ExponentVector>> {
    let n = order.nvars();
    let leads: Vec<ExponentVector> = gb.iter().filter_map(|g| leading_exponent(g, order)).collect();
    for i in 0..n {
        let pure = leads
            .iter()
            .any(|l| l[i] > 0 && l.iter().enumerate().all(|(j, &x)| j == i || x == 0));
        if !pure {
            return None;
        }
    }
    let standard = |m: &ExponentVector| !leads.iter().any(|l| divides(l, m));
    let start = ExponentVector::zeros(n);
    if !standard(&start) {
        return Some(Vec::new());
    }
    let mut seen: HashSet<ExponentVector> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    let mut out = Vec::new();
    while let Some(m) = queue.pop_front() {
        for i in 0..n {
            let mut next = m.clone();
            next.0[i] += 1;
            if !seen.contains(&next) && standard(&next) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
        out.push(m);
    }
    out.sort();
    Some(out)
}

pub fn colength<C: Scalar>(gb: &[Poly<C>], order: &MonomialOrder) -> Colength {
    match standard_monomials(gb, order) {
        Some(v) => Colength::Finite(v.len()),
        None => Colength::Infinite,
    }
}
