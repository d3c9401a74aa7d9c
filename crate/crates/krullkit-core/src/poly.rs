//! Multivariate polynomials over an exact field, with lex and grevlex
//! monomial orders, the shared text format (`3*x1^2*x2 - x3 + 1`), and the
//! univariate helpers (division, gcd, radical) used by the ring oracles.

use alloc::collections::BTreeMap;
use alloc::fmt;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::field::Field;

/// Exponent vector; the length is the variable count of its ring.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u32>);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Pure lexicographic, first variable most significant.
    Lex,
    /// Graded reverse lexicographic.
    GrevLex,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must know `self` divides `other`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn cmp_by(&self, other: &Monomial, order: MonomialOrder) -> core::cmp::Ordering {
        use core::cmp::Ordering;
        match order {
            MonomialOrder::Lex => self.0.cmp(&other.0),
            MonomialOrder::GrevLex => {
                match self.total_degree().cmp(&other.total_degree()) {
                    Ordering::Equal => {}
                    o => return o,
                }
                for (a, b) in self.0.iter().zip(&other.0).rev() {
                    match a.cmp(b) {
                        Ordering::Equal => {}
                        // Smaller exponent in the last differing place wins.
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// Polynomial as a map monomial -> nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Poly<T: Ord> {
    pub terms: BTreeMap<Monomial, T>,
}

impl<T: Clone + Ord> Poly<T> {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    pub fn leading(&self, order: MonomialOrder) -> Option<(&Monomial, &T)> {
        self.terms
            .iter()
            .max_by(|(m1, _), (m2, _)| m1.cmp_by(m2, order))
    }

    /// Least monomial in lexicographic order, with its coefficient.
    pub fn lex_least(&self) -> Option<(&Monomial, &T)> {
        self.terms.iter().min_by(|(m1, _), (m2, _)| m1.0.cmp(&m2.0))
    }
}

/// Context for polynomial arithmetic: a field plus a variable count.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyCtx<F: Field> {
    pub field: F,
    pub nvars: usize,
}

impl<F: Field> PolyCtx<F> {
    pub fn new(field: F, nvars: usize) -> Self {
        PolyCtx { field, nvars }
    }

    pub fn zero(&self) -> Poly<F::Elem> {
        Poly::zero()
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F::Elem> {
        let mut p = Poly::zero();
        if !self.field.is_zero(&c) {
            p.terms.insert(Monomial::one(self.nvars), c);
        }
        p
    }

    pub fn one(&self) -> Poly<F::Elem> {
        self.constant(self.field.one())
    }

    pub fn var(&self, i: usize) -> Poly<F::Elem> {
        let mut p = Poly::zero();
        p.terms.insert(Monomial::var(i, self.nvars), self.field.one());
        p
    }

    pub fn add_term(&self, p: &mut Poly<F::Elem>, m: Monomial, c: F::Elem) {
        if self.field.is_zero(&c) {
            return;
        }
        match p.terms.remove(&m) {
            None => {
                p.terms.insert(m, c);
            }
            Some(old) => {
                let s = self.field.add(&old, &c);
                if !self.field.is_zero(&s) {
                    p.terms.insert(m, s);
                }
            }
        }
    }

    pub fn add(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut out = a.clone();
        for (m, c) in &b.terms {
            self.add_term(&mut out, m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        Poly {
            terms: a
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.field.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut out = Poly::zero();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                self.add_term(&mut out, ma.mul(mb), self.field.mul(ca, cb));
            }
        }
        out
    }

    pub fn mul_term(&self, a: &Poly<F::Elem>, m: &Monomial, c: &F::Elem) -> Poly<F::Elem> {
        let mut out = Poly::zero();
        for (ma, ca) in &a.terms {
            self.add_term(&mut out, ma.mul(m), self.field.mul(ca, c));
        }
        out
    }

    pub fn scale(&self, a: &Poly<F::Elem>, c: &F::Elem) -> Poly<F::Elem> {
        self.mul_term(a, &Monomial::one(self.nvars), c)
    }

    pub fn pow(&self, a: &Poly<F::Elem>, k: u32) -> Poly<F::Elem> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Leading coefficient made 1; zero stays zero.
    pub fn monic(&self, a: &Poly<F::Elem>, order: MonomialOrder) -> Poly<F::Elem> {
        match a.leading(order) {
            None => Poly::zero(),
            Some((_, c)) => {
                let inv = self.field.inv(c).expect("leading coefficient is nonzero");
                self.scale(a, &inv)
            }
        }
    }

    /// Substitutes `vals[i]` (in an arbitrary commutative ring `R`) for
    /// variable `i`, mapping coefficients through `embed`.
    pub fn eval_in<R, E>(
        &self,
        p: &Poly<F::Elem>,
        vals: &[E],
        ring: &R,
        embed: impl Fn(&F::Elem) -> E,
    ) -> E
    where
        R: crate::ring::Ring<Elem = E>,
        E: Clone + PartialEq + Eq + fmt::Debug,
    {
        let mut acc = ring.zero();
        for (m, c) in &p.terms {
            let mut term = embed(c);
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    term = ring.mul(&term, &vals[i]);
                }
            }
            acc = ring.add(&acc, &term);
        }
        acc
    }

    // ----- univariate helpers (nvars == 1) -----

    fn udeg(&self, a: &Poly<F::Elem>) -> Option<u32> {
        a.terms.keys().map(|m| m.0[0]).max()
    }

    fn ucoef(&self, a: &Poly<F::Elem>, d: u32) -> F::Elem {
        a.terms
            .get(&Monomial(vec![d]))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// Euclidean division of univariate polynomials: `a = q b + r`.
    pub fn udiv_rem(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> (Poly<F::Elem>, Poly<F::Elem>) {
        assert_eq!(self.nvars, 1, "univariate division");
        let db = self.udeg(b).expect("division by zero polynomial");
        let lb = self.ucoef(b, db);
        let lb_inv = self.field.inv(&lb).expect("nonzero leading coefficient");
        let mut q = Poly::zero();
        let mut r = a.clone();
        while let Some(dr) = self.udeg(&r) {
            if dr < db {
                break;
            }
            let c = self.field.mul(&self.ucoef(&r, dr), &lb_inv);
            let m = Monomial(vec![dr - db]);
            self.add_term(&mut q, m.clone(), c.clone());
            r = self.sub(&r, &self.mul_term(b, &m, &c));
        }
        (q, r)
    }

    pub fn udivides(&self, b: &Poly<F::Elem>, a: &Poly<F::Elem>) -> bool {
        if b.is_zero() {
            return a.is_zero();
        }
        self.udiv_rem(a, b).1.is_zero()
    }

    pub fn ugcd(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let r = self.udiv_rem(&x, &y).1;
            x = y;
            y = r;
        }
        self.monic(&x, MonomialOrder::Lex)
    }

    pub fn uderivative(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut out = Poly::zero();
        for (m, c) in &a.terms {
            let e = m.0[0];
            if e > 0 {
                let factor = self.field.from_int(e as i64);
                self.add_term(&mut out, Monomial(vec![e - 1]), self.field.mul(c, &factor));
            }
        }
        out
    }

    /// Monic product of the distinct irreducible factors of `a` (`a` must
    /// be nonzero).  Handles characteristic p via p-th roots, so it is exact
    /// over both the rationals and prime fields.
    pub fn uradical(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        assert!(!a.is_zero());
        let a = self.monic(a, MonomialOrder::Lex);
        if self.udeg(&a) == Some(0) {
            return self.one();
        }
        let da = self.uderivative(&a);
        if da.is_zero() {
            // a is a polynomial in X^p with p = char; its p-th root has the
            // same coefficients (Frobenius is the identity on GF(p)).
            let p = self.field.characteristic() as u32;
            debug_assert!(p > 0);
            let root = Poly {
                terms: a
                    .terms
                    .iter()
                    .map(|(m, c)| (Monomial(vec![m.0[0] / p]), c.clone()))
                    .collect(),
            };
            return self.uradical(&root);
        }
        let c = self.ugcd(&a, &da);
        if self.udeg(&c) == Some(0) {
            return a;
        }
        let w = self.udiv_rem(&a, &c).0;
        let r = self.uradical(&c);
        let shared = self.ugcd(&w, &r);
        self.monic(&self.mul(&w, &self.udiv_rem(&r, &shared).0), MonomialOrder::Lex)
    }

    // ----- text format -----

    /// Parses the shared text format, e.g. `3*x1^2*x2 - x3 + 1`.
    pub fn parse(&self, input: &str) -> Result<Poly<F::Elem>, PolyParseError> {
        let mut out = Poly::zero();
        let mut rest = input.trim();
        if rest.is_empty() {
            return Err(PolyParseError::Empty);
        }
        let mut sign = 1i64;
        if let Some(t) = rest.strip_prefix('-') {
            sign = -1;
            rest = t;
        } else if let Some(t) = rest.strip_prefix('+') {
            rest = t;
        }
        loop {
            rest = rest.trim_start();
            let end = rest
                .char_indices()
                .find(|&(_, ch)| ch == '+' || ch == '-')
                .map_or(rest.len(), |(i, _)| i);
            let term = rest[..end].trim();
            if term.is_empty() {
                return Err(PolyParseError::Malformed(rest.into()));
            }
            let (m, c) = self.parse_term(term, sign)?;
            self.add_term(&mut out, m, c);
            if end == rest.len() {
                break;
            }
            sign = if rest.as_bytes()[end] == b'-' { -1 } else { 1 };
            rest = &rest[end + 1..];
        }
        Ok(out)
    }

    fn parse_term(&self, term: &str, sign: i64) -> Result<(Monomial, F::Elem), PolyParseError> {
        let mut coef = if sign >= 0 {
            self.field.one()
        } else {
            self.field.neg(&self.field.one())
        };
        let mut mono = Monomial::one(self.nvars);
        let mut saw_factor = false;
        for factor in term.split('*') {
            let f = factor.trim();
            if f.is_empty() {
                return Err(PolyParseError::Malformed(term.into()));
            }
            saw_factor = true;
            if let Some(varpart) = f.strip_prefix('x') {
                let (idx_str, exp) = match varpart.split_once('^') {
                    Some((i, e)) => {
                        let exp: u32 = e
                            .trim()
                            .parse()
                            .map_err(|_| PolyParseError::Malformed(term.into()))?;
                        (i.trim(), exp)
                    }
                    None => (varpart.trim(), 1),
                };
                let idx: usize = idx_str
                    .parse()
                    .map_err(|_| PolyParseError::Malformed(term.into()))?;
                if idx == 0 || idx > self.nvars {
                    return Err(PolyParseError::VariableOutOfRange {
                        var: idx,
                        nvars: self.nvars,
                    });
                }
                mono.0[idx - 1] += exp;
            } else {
                let c = self
                    .field
                    .parse(f)
                    .map_err(|_| PolyParseError::Malformed(term.into()))?;
                coef = self.field.mul(&coef, &c);
            }
        }
        if !saw_factor {
            return Err(PolyParseError::Malformed(term.into()));
        }
        Ok((mono, coef))
    }

    /// Renders in the shared text format with terms in descending grevlex
    /// order.
    pub fn format(&self, p: &Poly<F::Elem>) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<(&Monomial, &F::Elem)> = p.terms.iter().collect();
        terms.sort_by(|(m1, _), (m2, _)| m2.cmp_by(m1, MonomialOrder::GrevLex));
        let mut out = String::new();
        for (i, (m, c)) in terms.iter().enumerate() {
            let cs = self.field.format(c);
            let (neg, abs) = match cs.strip_prefix('-') {
                Some(a) => (true, a.to_string()),
                None => (false, cs),
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if abs != "1" || m.is_one() {
                factors.push(abs);
            }
            for (v, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(alloc::format!("x{}", v + 1));
                } else if e > 1 {
                    factors.push(alloc::format!("x{}^{}", v + 1, e));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyParseError {
    Empty,
    Malformed(String),
    VariableOutOfRange { var: usize, nvars: usize },
}

impl fmt::Display for PolyParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyParseError::Empty => write!(f, "empty polynomial"),
            PolyParseError::Malformed(t) => write!(f, "malformed term {t:?}"),
            PolyParseError::VariableOutOfRange { var, nvars } => {
                write!(f, "variable x{var} out of range for {nvars} variables")
            }
        }
    }
}

impl core::error::Error for PolyParseError {}
