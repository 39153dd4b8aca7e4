//! Multivariate polynomials over an exact field.
//!
//! A [`Poly`] is a term list sorted strictly descending in its ring's monomial
//! order, with no zero coefficients and no repeated monomials. Rings are
//! shared through `Arc` and are immutable.

mod monomial;
pub mod serial;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

pub use monomial::{
    cmp_mono, FxBuild, FxHashMap, ModuleOrder, ModuleOrderKind, Mono, MonomialOrder, MAX_VARS,
};

use crate::error::{Error, Result};
use crate::field::Field;

/// A polynomial ring `K[x_0..x_{n-1}]` with a monomial order and optional
/// positive (or zero) variable weights.
#[derive(Debug, Clone, PartialEq)]
pub struct Ring<F: Field> {
    field: F,
    names: Vec<String>,
    weights: Vec<u16>,
    order: MonomialOrder,
}

impl<F: Field> Ring<F> {
    pub fn new(field: F, names: Vec<String>, order: MonomialOrder) -> Result<Arc<Self>> {
        let n = names.len();
        Self::with_weights(field, names, vec![1; n], order)
    }

    pub fn with_weights(
        field: F,
        names: Vec<String>,
        weights: Vec<u16>,
        order: MonomialOrder,
    ) -> Result<Arc<Self>> {
        let n = names.len();
        if n == 0 || n > MAX_VARS {
            return Err(Error::InvalidArgument(format!(
                "number of variables must be in 1..={MAX_VARS}, got {n}"
            )));
        }
        if weights.len() != n {
            return Err(Error::InvalidArgument("weights length differs from names".into()));
        }
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != n {
            return Err(Error::InvalidArgument("variable names must be distinct".into()));
        }
        if let MonomialOrder::BlockElim(k) = order {
            if k == 0 || k >= n {
                return Err(Error::InvalidArgument(format!(
                    "BlockElim({k}) needs 0 < k < {n}"
                )));
            }
        }
        Ok(Arc::new(Ring {
            field,
            names,
            weights,
            order,
        }))
    }

    /// `K[prefix0, ..., prefix{n-1}]` in graded reverse lex.
    pub fn indexed(field: F, prefix: &str, n: usize) -> Arc<Self> {
        let names = (0..n).map(|i| format!("{prefix}{i}")).collect();
        Self::new(field, names, MonomialOrder::GrevLex).expect("valid indexed ring")
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u16] {
        &self.weights
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_standard_graded(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    /// Same variables and weights, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<Self>> {
        Self::with_weights(self.field.clone(), self.names.clone(), self.weights.clone(), order)
    }

    pub fn mono(&self, exps: &[u32]) -> Mono {
        assert_eq!(exps.len(), self.nvars(), "exponent vector length");
        Mono::new(exps, &self.weights)
    }

    pub fn var_mono(&self, i: usize) -> Mono {
        let mut e = vec![0; self.nvars()];
        e[i] = 1;
        self.mono(&e)
    }

    #[inline]
    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        cmp_mono(self.order, self.nvars(), None, a, b)
    }

    pub fn zero(self: &Arc<Self>) -> Poly<F> {
        Poly {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(self: &Arc<Self>) -> Poly<F> {
        self.constant(self.field.one())
    }

    pub fn constant(self: &Arc<Self>, c: F::Elem) -> Poly<F> {
        Poly::from_terms(self, vec![(c, Mono::ONE)])
    }

    pub fn var(self: &Arc<Self>, i: usize) -> Poly<F> {
        assert!(i < self.nvars(), "variable index out of range");
        Poly {
            ring: self.clone(),
            terms: vec![(self.field.one(), self.var_mono(i))],
        }
    }

    pub fn vars(self: &Arc<Self>) -> Vec<Poly<F>> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    /// The linear form `Σ c_i x_i`.
    pub fn linear_form(self: &Arc<Self>, coeffs: &[F::Elem]) -> Poly<F> {
        assert_eq!(coeffs.len(), self.nvars());
        let terms = coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), self.var_mono(i)))
            .collect();
        Poly::from_terms(self, terms)
    }

    pub fn term(self: &Arc<Self>, c: F::Elem, exps: &[u32]) -> Poly<F> {
        let m = self.mono(exps);
        Poly::from_terms(self, vec![(c, m)])
    }

    /// All monomials of (weighted) degree `d`, descending in the ring order.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Mono> {
        let n = self.nvars();
        let mut out = Vec::new();
        let mut exps = vec![0u32; n];
        fn rec(
            i: usize,
            left: u32,
            exps: &mut Vec<u32>,
            weights: &[u16],
            out: &mut Vec<Mono>,
        ) {
            let n = exps.len();
            if i == n - 1 {
                let w = weights[i] as u32;
                if w == 0 {
                    if left == 0 {
                        exps[i] = 0;
                        out.push(Mono::new(exps, weights));
                    }
                } else if left % w == 0 {
                    exps[i] = left / w;
                    out.push(Mono::new(exps, weights));
                }
                return;
            }
            let w = weights[i] as u32;
            assert!(w > 0, "monomials_of_degree needs positive weights");
            let mut e = 0;
            while e * w <= left {
                exps[i] = e;
                rec(i + 1, left - e * w, exps, weights, out);
                e += 1;
            }
            exps[i] = 0;
        }
        rec(0, d, &mut exps, &self.weights, &mut out);
        out.sort_unstable_by(|a, b| self.cmp(b, a));
        out
    }

    /// True when both rings have identical variables, weights, order and field.
    pub fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }
}

/// A polynomial: terms sorted strictly descending, nonzero coefficients.
#[derive(Clone)]
pub struct Poly<F: Field> {
    ring: Arc<Ring<F>>,
    terms: Vec<(F::Elem, Mono)>,
}

impl<F: Field> PartialEq for Poly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.terms == other.terms
    }
}

impl<F: Field> Eq for Poly<F> {}

impl<F: Field> Poly<F> {
    /// Builds a polynomial from arbitrary terms, sorting and combining.
    pub fn from_terms(ring: &Arc<Ring<F>>, mut terms: Vec<(F::Elem, Mono)>) -> Self {
        let field = &ring.field;
        terms.sort_unstable_by(|a, b| ring.cmp(&b.1, &a.1));
        let mut out: Vec<(F::Elem, Mono)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 = field.add(&last.0, &c),
                _ => {
                    if let Some(last) = out.last() {
                        if field.is_zero(&last.0) {
                            out.pop();
                        }
                    }
                    out.push((c, m));
                }
            }
        }
        if let Some(last) = out.last() {
            if field.is_zero(&last.0) {
                out.pop();
            }
        }
        Poly {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Wraps terms already in canonical order; checked in debug builds.
    pub(crate) fn from_sorted_terms(ring: &Arc<Ring<F>>, terms: Vec<(F::Elem, Mono)>) -> Self {
        let p = Poly {
            ring: ring.clone(),
            terms,
        };
        debug_assert!(p.is_canonical(), "terms not canonical");
        p
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        &self.ring.field
    }

    pub fn terms(&self) -> &[(F::Elem, Mono)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(F::Elem, Mono)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Strictly descending order and no zero coefficients.
    pub fn is_canonical(&self) -> bool {
        self.terms.iter().all(|(c, _)| !self.field().is_zero(c))
            && self
                .terms
                .windows(2)
                .all(|w| self.ring.cmp(&w[0].1, &w[1].1) == Ordering::Greater)
    }

    pub fn lead(&self) -> Option<&(F::Elem, Mono)> {
        self.terms.first()
    }

    pub fn lead_mono(&self) -> Option<Mono> {
        self.terms.first().map(|t| t.1)
    }

    pub fn lead_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.0)
    }

    /// Maximal unweighted total degree; −1 for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms
            .iter()
            .map(|(_, m)| m.total_degree() as i64)
            .max()
            .unwrap_or(-1)
    }

    /// Weighted degree of the leading term; −1 for zero.
    pub fn weighted_degree(&self) -> i64 {
        self.terms
            .iter()
            .map(|(_, m)| m.deg() as i64)
            .max()
            .unwrap_or(-1)
    }

    /// All terms share one weighted degree (zero counts as homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((_, m0)) => self.terms.iter().all(|(_, m)| m.deg() == m0.deg()),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(_, m)| m.is_one())
    }

    fn check_ring(&self, other: &Self) {
        assert!(
            self.ring.same_as(&other.ring),
            "polynomials from different rings"
        );
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        self.check_ring(other);
        let field = self.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match self.ring.cmp(&a[i].1, &b[j].1) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { field.neg(&b[j].0) } else { b[j].0.clone() };
                    out.push((c, b[j].1));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        field.sub(&a[i].0, &b[j].0)
                    } else {
                        field.add(&a[i].0, &b[j].0)
                    };
                    if !field.is_zero(&c) {
                        out.push((c, a[i].1));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { field.neg(&t.0) } else { t.0.clone() };
            out.push((c, t.1));
        }
        Poly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn neg(&self) -> Self {
        let field = self.field();
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(c, m)| (field.neg(c), *m)).collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return self.ring.zero();
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(a, m)| (field.mul(a, c), *m)).collect(),
        }
    }

    /// `c · m · self`; monomial multiplication preserves the order.
    pub fn mul_term(&self, c: &F::Elem, m: &Mono) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return self.ring.zero();
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, t)| (field.mul(a, c), t.mul(m)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_ring(other);
        if self.is_zero() || other.is_zero() {
            return self.ring.zero();
        }
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.len() == 1 {
            let (c, m) = &small.terms[0];
            return big.mul_term(c, m);
        }
        let field = self.field();
        let mut acc: FxHashMap<Mono, F::Elem> = FxHashMap::default();
        acc.reserve(small.len() * big.len());
        for (a, ma) in &small.terms {
            for (b, mb) in &big.terms {
                let m = ma.mul(mb);
                let prod = field.mul(a, b);
                acc.entry(m)
                    .and_modify(|c| *c = field.add(c, &prod))
                    .or_insert(prod);
            }
        }
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !field.is_zero(c))
            .map(|(m, c)| (c, m))
            .collect();
        Poly::from_terms(&self.ring, terms)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn make_monic(&self) -> Self {
        match self.lead_coeff() {
            None => self.clone(),
            Some(c) if self.field().is_one(c) => self.clone(),
            Some(c) => {
                let inv = self.field().inv(c).expect("nonzero lead");
                self.scale(&inv)
            }
        }
    }

    pub fn coefficient(&self, m: &Mono) -> F::Elem {
        self.terms
            .iter()
            .find(|(_, t)| t == m)
            .map(|(c, _)| c.clone())
            .unwrap_or_else(|| self.field().zero())
    }

    /// Value at a point of `K^n`.
    pub fn evaluate(&self, point: &[F::Elem]) -> Result<F::Elem> {
        let n = self.ring.nvars();
        if point.len() != n {
            return Err(Error::RingMismatch(format!(
                "point has {} coordinates, ring has {n} variables",
                point.len()
            )));
        }
        let field = self.field();
        let mut maxe = vec![0u32; n];
        for (_, m) in &self.terms {
            for (i, e) in maxe.iter_mut().enumerate() {
                *e = (*e).max(m.exp(i));
            }
        }
        let powers: Vec<Vec<F::Elem>> = (0..n)
            .map(|i| {
                let mut v = Vec::with_capacity(maxe[i] as usize + 1);
                v.push(field.one());
                for k in 0..maxe[i] as usize {
                    let next = field.mul(&v[k], &point[i]);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = field.zero();
        for (c, m) in &self.terms {
            let mut t = c.clone();
            for (i, pw) in powers.iter().enumerate() {
                let e = m.exp(i) as usize;
                if e > 0 {
                    t = field.mul(&t, &pw[e]);
                }
            }
            acc = field.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Composition `self(forms)`. The forms must live in one target ring and
    /// be homogeneous of a common degree.
    pub fn substitute(&self, forms: &[Poly<F>]) -> Result<Poly<F>> {
        if forms.len() != self.ring.nvars() {
            return Err(Error::InvalidArgument(format!(
                "substitute needs {} forms, got {}",
                self.ring.nvars(),
                forms.len()
            )));
        }
        let target = forms[0].ring().clone();
        let mut deg = None;
        for f in forms {
            if !f.ring.same_as(&target) {
                return Err(Error::RingMismatch("substituted forms live in different rings".into()));
            }
            if !f.is_homogeneous() {
                return Err(Error::NotHomogeneous("substituted form".into()));
            }
            if !f.is_zero() {
                let d = f.weighted_degree();
                match deg {
                    None => deg = Some(d),
                    Some(d0) if d0 != d => {
                        return Err(Error::NotHomogeneous(format!(
                            "substituted forms have degrees {d0} and {d}"
                        )))
                    }
                    _ => {}
                }
            }
        }
        Ok(self.compose(forms))
    }

    /// Composition without homogeneity checks.
    pub fn compose(&self, forms: &[Poly<F>]) -> Poly<F> {
        assert_eq!(forms.len(), self.ring.nvars());
        let target = forms[0].ring().clone();
        let field = target.field().clone();
        let n = forms.len();
        let mut maxe = vec![0u32; n];
        for (_, m) in &self.terms {
            for (i, e) in maxe.iter_mut().enumerate() {
                *e = (*e).max(m.exp(i));
            }
        }
        let powers: Vec<Vec<Poly<F>>> = (0..n)
            .map(|i| {
                let mut v = vec![target.one()];
                for k in 0..maxe[i] as usize {
                    let next = v[k].mul(&forms[i]);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc: FxHashMap<Mono, F::Elem> = FxHashMap::default();
        for (c, m) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, pw) in powers.iter().enumerate() {
                let e = m.exp(i) as usize;
                if e > 0 {
                    t = t.mul(&pw[e]);
                }
            }
            for (a, mm) in t.terms {
                acc.entry(mm)
                    .and_modify(|x| *x = field.add(x, &a))
                    .or_insert(a);
            }
        }
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !field.is_zero(c))
            .map(|(m, c)| (c, m))
            .collect();
        Poly::from_terms(&target, terms)
    }

    /// Formal partial derivative in variable `i`.
    pub fn partial(&self, i: usize) -> Result<Poly<F>> {
        let n = self.ring.nvars();
        if i >= n {
            return Err(Error::InvalidArgument(format!("variable index {i} out of range")));
        }
        let field = self.field();
        let dm = self.ring.var_mono(i);
        let terms = self
            .terms
            .iter()
            .filter(|(_, m)| m.exp(i) > 0)
            .map(|(c, m)| (field.mul(c, &field.from_i64(m.exp(i) as i64)), m.div(&dm)))
            .filter(|(c, _)| !field.is_zero(c))
            .collect();
        Ok(Poly::from_terms(&self.ring, terms))
    }

    /// Reinterprets the polynomial in a ring with the same number of
    /// variables (typically a different order), re-sorting terms.
    pub fn to_ring(&self, ring: &Arc<Ring<F>>) -> Poly<F> {
        assert_eq!(ring.nvars(), self.ring.nvars());
        if ring.same_as(&self.ring) {
            return self.clone();
        }
        let w = ring.weights();
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| {
                let e: Vec<u32> = (0..ring.nvars()).map(|i| m.exp(i)).collect();
                (c.clone(), Mono::new(&e, w).with_comp(m.comp()))
            })
            .collect();
        Poly::from_terms(ring, terms)
    }

    /// Moves variable `i` to variable `map[i]` of a larger (or equal) ring.
    pub fn embed(&self, ring: &Arc<Ring<F>>, map: &[usize]) -> Poly<F> {
        assert_eq!(map.len(), self.ring.nvars());
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| {
                let mut e = vec![0u32; ring.nvars()];
                for (i, &j) in map.iter().enumerate() {
                    e[j] += m.exp(i);
                }
                (c.clone(), ring.mono(&e))
            })
            .collect();
        Poly::from_terms(ring, terms)
    }

    /// Restricts to the variables listed in `keep` (all other exponents must
    /// be zero), mapping `keep[j]` to variable `j` of `ring`.
    pub fn restrict(&self, ring: &Arc<Ring<F>>, keep: &[usize]) -> Option<Poly<F>> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (c, m) in &self.terms {
            let e: Vec<u32> = keep.iter().map(|&i| m.exp(i)).collect();
            if e.iter().sum::<u32>() != m.total_degree() {
                return None;
            }
            terms.push((c.clone(), ring.mono(&e)));
        }
        Some(Poly::from_terms(ring, terms))
    }

    /// Variables that occur in some term.
    pub fn support_vars(&self) -> Vec<usize> {
        let n = self.ring.nvars();
        (0..n)
            .filter(|&i| self.terms.iter().any(|(_, m)| m.exp(i) > 0))
            .collect()
    }

    /// The coefficient vector on a list of monomials (absent ones are zero).
    pub fn coefficients_on(&self, monos: &FxHashMap<Mono, usize>, width: usize) -> Vec<F::Elem> {
        let field = self.field();
        let mut row = vec![field.zero(); width];
        for (c, m) in &self.terms {
            let j = *monos.get(m).expect("monomial outside the given basis");
            row[j] = c.clone();
        }
        row
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serial::to_text(self))
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serial::to_text(self))
    }
}

/// The four ring operations of the public surface, with ring checking.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn arith<F: Field>(op: ArithOp, f: &Poly<F>, g: &Poly<F>) -> Result<Poly<F>> {
    if !f.ring().same_as(g.ring()) {
        return Err(Error::RingMismatch("arithmetic on polynomials from different rings".into()));
    }
    Ok(match op {
        ArithOp::Add => f.add(g),
        ArithOp::Sub => f.sub(g),
        ArithOp::Mul => f.mul(g),
    })
}

/// Products of all pairs, `f_i * g_j`.
pub fn pairwise_products<F: Field>(fs: &[Poly<F>], gs: &[Poly<F>]) -> Vec<Poly<F>> {
    let mut out = Vec::with_capacity(fs.len() * gs.len());
    for f in fs {
        for g in gs {
            out.push(f.mul(g));
        }
    }
    out
}

/// Determinant by cofactor expansion; used only for small minors.
pub fn determinant<F: Field>(rows: &[Vec<Poly<F>>]) -> Poly<F> {
    let n = rows.len();
    assert!(n > 0 && rows.iter().all(|r| r.len() == n));
    if n == 1 {
        return rows[0][0].clone();
    }
    if n == 2 {
        return rows[0][0].mul(&rows[1][1]).sub(&rows[0][1].mul(&rows[1][0]));
    }
    let ring = rows[0][0].ring().clone();
    let mut acc = ring.zero();
    for j in 0..n {
        if rows[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly<F>>> = rows[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = rows[0][j].mul(&determinant(&minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// All `k × k` minors of a matrix of polynomials, in lexicographic order of
/// (row subset, column subset); zero minors are dropped.
pub fn minors<F: Field>(matrix: &[Vec<Poly<F>>], k: usize) -> Vec<Poly<F>> {
    let nrows = matrix.len();
    let ncols = matrix.first().map_or(0, |r| r.len());
    let mut out = Vec::new();
    for rs in subsets(nrows, k) {
        for cs in subsets(ncols, k) {
            let sub: Vec<Vec<Poly<F>>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| matrix[r][c].clone()).collect())
                .collect();
            let d = determinant(&sub);
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    out
}

/// k-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
