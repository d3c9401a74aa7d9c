//! Collapse data for idealistic chains over a ring, in two interchangeable
//! forms, with verified transformations between them.
//!
//! Form 1 is the nested identity
//! `u0 (u1 ( ... (ul + jl) + ... ) + j1) + j0 = 0` with `ui` a monomial in
//! `U_i` and `ji` an explicit combination of `J_i`.  Form 3 is a triangular
//! system `x1, U0 |- J0`, `x_{i+1}, U_i |- J_i, x_i`, `U_l |- J_l, x_l`
//! with every membership carried by exponents and cofactors.  Every claim
//! re-verifies by plain ring arithmetic.

use alloc::vec;
use alloc::vec::Vec;

use super::certificate::SingularityCertificate;
use super::{combine, monomial_value, Ring, RingError};

/// An idealistic chain over a ring: level `i` carries the finite sets
/// `J_i` (to vanish) and `U_i` (to stay away from the prime).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingChain<E> {
    pub j_levels: Vec<Vec<E>>,
    pub u_levels: Vec<Vec<E>>,
}

impl<E> RingChain<E> {
    pub fn levels(&self) -> usize {
        self.j_levels.len().saturating_sub(1)
    }

    fn check(&self) -> Result<(), RingError> {
        if self.j_levels.is_empty() || self.j_levels.len() != self.u_levels.len() {
            return Err(RingError::ArityMismatch {
                expected: self.j_levels.len(),
                got: self.u_levels.len(),
            });
        }
        Ok(())
    }
}

/// Form-1 data: per level, exponents over `U_i` and cofactors over `J_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Form1<E> {
    pub u_exps: Vec<Vec<u32>>,
    pub j_cofs: Vec<Vec<E>>,
}

/// One row of form-3 data.
///
/// Row `r` states `x_{r+1}^e * prod(U_r^exps) = sum(j_cofs * J_r) +
/// x_cofactor * x_r`; the `x` factor is absent on the last row and the
/// `x_cofactor` on row 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Form3Row<E> {
    pub x_power: Option<u32>,
    pub u_exps: Vec<u32>,
    pub j_cofs: Vec<E>,
    pub x_cofactor: Option<E>,
}

/// Form-3 data: the chain elements `x1..xl` plus one membership row per
/// level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Form3<E> {
    pub xs: Vec<E>,
    pub rows: Vec<Form3Row<E>>,
}

fn level_values<R: Ring>(
    r: &R,
    chain: &RingChain<R::Elem>,
    f1: &Form1<R::Elem>,
) -> Result<(Vec<R::Elem>, Vec<R::Elem>), RingError> {
    let n = chain.j_levels.len();
    if f1.u_exps.len() != n || f1.j_cofs.len() != n {
        return Err(RingError::ArityMismatch { expected: n, got: f1.u_exps.len() });
    }
    let mut us = Vec::with_capacity(n);
    let mut js = Vec::with_capacity(n);
    for i in 0..n {
        if f1.u_exps[i].len() != chain.u_levels[i].len() {
            return Err(RingError::ArityMismatch {
                expected: chain.u_levels[i].len(),
                got: f1.u_exps[i].len(),
            });
        }
        if f1.j_cofs[i].len() != chain.j_levels[i].len() {
            return Err(RingError::ArityMismatch {
                expected: chain.j_levels[i].len(),
                got: f1.j_cofs[i].len(),
            });
        }
        us.push(monomial_value(r, &f1.u_exps[i], &chain.u_levels[i]));
        js.push(combine(r, &f1.j_cofs[i], &chain.j_levels[i]));
    }
    Ok((us, js))
}

/// Checks the form-1 identity exactly.
pub fn verify_form1<R: Ring>(
    r: &R,
    chain: &RingChain<R::Elem>,
    f1: &Form1<R::Elem>,
) -> Result<(), RingError> {
    chain.check()?;
    let (us, js) = level_values(r, chain, f1)?;
    let mut acc = r.one();
    for i in (0..us.len()).rev() {
        acc = r.add(&r.mul(&us[i], &acc), &js[i]);
    }
    if r.is_zero(&acc) {
        Ok(())
    } else {
        Err(RingError::CertificateInvalid("form-1 identity does not vanish"))
    }
}

/// Checks every membership row of form-3 data exactly.
pub fn verify_form3<R: Ring>(
    r: &R,
    chain: &RingChain<R::Elem>,
    f3: &Form3<R::Elem>,
) -> Result<(), RingError> {
    chain.check()?;
    let l = chain.levels();
    if f3.xs.len() != l {
        return Err(RingError::ArityMismatch { expected: l, got: f3.xs.len() });
    }
    if f3.rows.len() != l + 1 {
        return Err(RingError::ArityMismatch { expected: l + 1, got: f3.rows.len() });
    }
    for (row_idx, row) in f3.rows.iter().enumerate() {
        if row.u_exps.len() != chain.u_levels[row_idx].len()
            || row.j_cofs.len() != chain.j_levels[row_idx].len()
            || (row.x_power.is_some() != (row_idx < l))
            || (row.x_cofactor.is_some() != (row_idx > 0))
        {
            return Err(RingError::CertificateInvalid("form-3 row shape"));
        }
        let mut lhs = monomial_value(r, &row.u_exps, &chain.u_levels[row_idx]);
        if let Some(e) = row.x_power {
            lhs = r.mul(&lhs, &r.pow(&f3.xs[row_idx], e));
        }
        let mut rhs = combine(r, &row.j_cofs, &chain.j_levels[row_idx]);
        if let Some(c) = &row.x_cofactor {
            rhs = r.add(&rhs, &r.mul(c, &f3.xs[row_idx - 1]));
        }
        if lhs != rhs {
            return Err(RingError::CertificateInvalid("form-3 membership row"));
        }
    }
    Ok(())
}

/// Form 1 to form 3: take `x_l = u_l + j_l`, `x_i = x_{i+1} u_i + j_i`;
/// each triangular row then holds with unit cofactors.
pub fn collapse_1_to_3<R: Ring>(
    r: &R,
    chain: &RingChain<R::Elem>,
    f1: &Form1<R::Elem>,
) -> Result<Form3<R::Elem>, RingError> {
    verify_form1(r, chain, f1)?;
    let (us, js) = level_values(r, chain, f1)?;
    let l = chain.levels();
    let neg = |v: &[R::Elem]| v.iter().map(|c| r.neg(c)).collect::<Vec<_>>();
    if l == 0 {
        let rows = vec![Form3Row {
            x_power: None,
            u_exps: f1.u_exps[0].clone(),
            j_cofs: neg(&f1.j_cofs[0]),
            x_cofactor: None,
        }];
        let out = Form3 { xs: Vec::new(), rows };
        verify_form3(r, chain, &out)?;
        return Ok(out);
    }
    let mut xs = vec![r.zero(); l];
    xs[l - 1] = r.add(&us[l], &js[l]);
    for i in (1..l).rev() {
        xs[i - 1] = r.add(&r.mul(&xs[i], &us[i]), &js[i]);
    }
    let mut rows = Vec::with_capacity(l + 1);
    for i in 0..=l {
        rows.push(Form3Row {
            x_power: (i < l).then_some(1),
            u_exps: f1.u_exps[i].clone(),
            j_cofs: neg(&f1.j_cofs[i]),
            x_cofactor: (i > 0).then(|| r.one()),
        });
    }
    let out = Form3 { xs, rows };
    verify_form3(r, chain, &out)?;
    Ok(out)
}

/// Nested form over levels `start..=l`, with concrete exponents and
/// cofactors.  Its value is `V_start` where `V_i = u_i V_{i+1} + j_i` and
/// `V_{l+1} = 1`.
struct NestedForm<E> {
    start: usize,
    u_exps: Vec<Vec<u32>>,
    j_cofs: Vec<Vec<E>>,
}

impl<E: Clone + PartialEq + Eq + core::fmt::Debug> NestedForm<E> {
    /// Values `V_start..V_{l+1}`, last entry 1.
    fn values<R: Ring<Elem = E>>(&self, r: &R, chain: &RingChain<E>) -> Vec<E> {
        let l = chain.levels();
        let mut vals = vec![r.one(); l - self.start + 2];
        for i in (self.start..=l).rev() {
            let u = monomial_value(r, &self.u_exps[i - self.start], &chain.u_levels[i]);
            let j = combine(r, &self.j_cofs[i - self.start], &chain.j_levels[i]);
            vals[i - self.start] = r.add(&r.mul(&u, &vals[i - self.start + 1]), &j);
        }
        vals
    }

    /// Raises the whole form to the `k`-th power: exponents scale by `k`
    /// and each cofactor block picks up the geometric-sum multiplier from
    /// `V^k = (u V')^k + j * sum_{t<k} V^t (u V')^{k-1-t}`.
    fn pow<R: Ring<Elem = E>>(&mut self, r: &R, chain: &RingChain<E>, k: u32) {
        let vals = self.values(r, chain);
        let l = chain.levels();
        for i in self.start..=l {
            let idx = i - self.start;
            let u = monomial_value(r, &self.u_exps[idx], &chain.u_levels[i]);
            let prod = r.mul(&u, &vals[idx + 1]);
            let mut mult = r.zero();
            for t in 0..k {
                mult = r.add(&mult, &r.mul(&r.pow(&vals[idx], t), &r.pow(&prod, k - 1 - t)));
            }
            for e in self.u_exps[idx].iter_mut() {
                *e *= k;
            }
            for c in self.j_cofs[idx].iter_mut() {
                *c = r.mul(c, &mult);
            }
        }
    }
}

/// Form 3 to form 1: the elimination cascade.  Starting from the top row,
/// maintain a nested form whose value is a multiple `k_i x_i`; each row is
/// scaled by the accumulated multiplier and absorbed, and row 0 closes the
/// identity.
pub fn collapse_3_to_1<R: Ring>(
    r: &R,
    chain: &RingChain<R::Elem>,
    f3: &Form3<R::Elem>,
) -> Result<Form1<R::Elem>, RingError> {
    verify_form3(r, chain, f3)?;
    let l = chain.levels();
    let neg = |v: &[R::Elem]| v.iter().map(|c| r.neg(c)).collect::<Vec<_>>();
    if l == 0 {
        let f1 = Form1 {
            u_exps: vec![f3.rows[0].u_exps.clone()],
            j_cofs: vec![neg(&f3.rows[0].j_cofs)],
        };
        verify_form1(r, chain, &f1)?;
        return Ok(f1);
    }
    // Top row: V_l = u_l - j_l = k_l x_l.
    let mut nf = NestedForm {
        start: l,
        u_exps: vec![f3.rows[l].u_exps.clone()],
        j_cofs: vec![neg(&f3.rows[l].j_cofs)],
    };
    let mut scale = f3.rows[l].x_cofactor.clone().expect("top row has x cofactor");
    for row_idx in (1..l).rev() {
        let row = &f3.rows[row_idx];
        let e = row.x_power.expect("inner row has x power");
        // (k_{r+1} x_{r+1})^e * u_r = k^e (j_r + d_r x_r).
        nf.pow(r, chain, e);
        let k_pow = r.pow(&scale, e);
        nf.start = row_idx;
        nf.u_exps.insert(0, row.u_exps.clone());
        nf.j_cofs
            .insert(0, row.j_cofs.iter().map(|c| r.neg(&r.mul(&k_pow, c))).collect());
        scale = r.mul(&k_pow, row.x_cofactor.as_ref().expect("inner row has x cofactor"));
        debug_assert_eq!(
            nf.values(r, chain)[0],
            r.mul(&scale, &f3.xs[row_idx - 1]),
            "cascade invariant V_r = k_r x_r"
        );
    }
    // Row 0: x_1^e u_0 = j_0 closes to V_0 = 0.
    let row = &f3.rows[0];
    let e = row.x_power.expect("row 0 has x power");
    nf.pow(r, chain, e);
    let k_pow = r.pow(&scale, e);
    nf.start = 0;
    nf.u_exps.insert(0, row.u_exps.clone());
    nf.j_cofs
        .insert(0, row.j_cofs.iter().map(|c| r.neg(&r.mul(&k_pow, c))).collect());
    let f1 = Form1 { u_exps: nf.u_exps, j_cofs: nf.j_cofs };
    verify_form1(r, chain, &f1)?;
    Ok(f1)
}

/// The elementary chain on `x1..xl`:
/// `({}, {x1}), ({x1}, {x2}), ..., ({xl}, {})`.
pub fn elementary_ring_chain<E: Clone>(xs: &[E]) -> RingChain<E> {
    let l = xs.len();
    let mut j_levels = Vec::with_capacity(l + 1);
    let mut u_levels = Vec::with_capacity(l + 1);
    for i in 0..=l {
        j_levels.push(if i == 0 { Vec::new() } else { vec![xs[i - 1].clone()] });
        u_levels.push(if i == l { Vec::new() } else { vec![xs[i].clone()] });
    }
    RingChain { j_levels, u_levels }
}

/// Form-1 data for the elementary chain of a verified singularity
/// certificate: `u_i = x_{i+1}^{m_{i+1}}` and `j_i = a_i x_i`.
pub fn form1_from_certificate<E: Clone>(cert: &SingularityCertificate<E>) -> Form1<E> {
    let l = cert.exponents.len();
    let mut u_exps = Vec::with_capacity(l + 1);
    let mut j_cofs = Vec::with_capacity(l + 1);
    for i in 0..=l {
        u_exps.push(if i == l { Vec::new() } else { vec![cert.exponents[i]] });
        j_cofs.push(if i == 0 {
            Vec::new()
        } else {
            vec![cert.coefficients[i - 1].clone()]
        });
    }
    Form1 { u_exps, j_cofs }
}
