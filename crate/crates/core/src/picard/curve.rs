//! The Neron-Severi group of the moduli of bundles over one fixed curve
//! (with the generic-curve assumption that the Jacobian has no extra
//! endomorphisms), and the restriction map onto it.

use super::{Context, NsClass};
use crate::error::{Error, Result};
use crate::exactalg::num::{is_int, Rat};
use crate::exactalg::MatQ;
use crate::invforms::{ambient_gram, WInvForm};
use crate::rootdata::Pi1Element;
use num::Zero;

/// A triple (l_R, b_R, b): a character of the radical torus, an integral
/// symmetric form on its cocharacters, and an even invariant form on the
/// coroot lattice (one basic multiplier per factor).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurveNsClass {
    /// Ambient dual vector supported on the abelian block.
    pub l_r: Vec<Rat>,
    /// Gram on the canonical basis of the radical cocharacter lattice.
    pub b_r: MatQ,
    /// Basic-form multipliers (an sc-even form).
    pub alpha: Vec<Rat>,
}

/// Rank of the fixed-curve Neron-Severi group under the generic-Jacobian
/// assumption: s + s(s+1)/2 + k.
pub fn curve_ns_rank(ctx: &Context) -> usize {
    let s = ctx.s();
    s + s * (s + 1) / 2 + ctx.k()
}

/// Ambient Gram of the orthogonal direct sum b_R ⊥ b.
fn triple_gram(ctx: &Context, cls: &CurveNsClass) -> MatQ {
    let p = &ctx.parts;
    let mut g = ambient_gram(
        &ctx.datum,
        p,
        &WInvForm::from_alpha(cls.alpha.clone()),
    );
    if p.ab_dim > 0 {
        // b_R is given on the canonical basis of the radical lattice; its
        // rational extension to the abelian block is U_r^{-T} b_R U_r^{-1}.
        let mut ur = MatQ::zeros(p.ab_dim, p.ab_dim);
        for (j, col) in p.lambda_r.basis_cols().iter().enumerate() {
            for i in 0..p.ab_dim {
                ur[(i, j)] = col[p.ss_dim + i].clone();
            }
        }
        let urinv = ur.inverse().ok_or(Error::DegeneratePairing).expect("radical full rank");
        let amb = urinv.transpose().mul(&cls.b_r).mul(&urinv);
        for a in 0..p.ab_dim {
            for b in 0..p.ab_dim {
                g[(p.ss_dim + a, p.ss_dim + b)] = amb[(a, b)].clone();
            }
        }
    }
    g
}

/// Membership test for a triple: the type conditions plus the two
/// integrality compatibilities on the cocharacter lattice.
pub fn curve_ns_membership(
    ctx: &Context,
    delta: &Pi1Element,
    cls: &CurveNsClass,
) -> Result<bool> {
    let p = &ctx.parts;
    // Type conditions: l_R a character of the radical, b_R integral
    // symmetric, b sc-even.
    if cls.l_r.len() != p.ambient || cls.l_r[..p.ss_dim].iter().any(|x| !x.is_zero()) {
        return Err(Error::InvalidParams("l_R must be supported on the abelian block".into()));
    }
    if !p.dual_r.contains(&cls.l_r) {
        return Ok(false);
    }
    if cls.b_r.rows() != p.ab_dim || !cls.b_r.is_symmetric() {
        return Err(Error::InvalidParams("b_R must be symmetric on the radical basis".into()));
    }
    for i in 0..p.ab_dim {
        for j in 0..p.ab_dim {
            if !is_int(&cls.b_r[(i, j)]) {
                return Ok(false);
            }
        }
    }
    if !ctx.forms.sc_even.params.contains(&cls.alpha) {
        return Ok(false);
    }
    // (a): l_R ⊕ b(d^ss ⊗ -) integral on the cocharacter lattice.
    let d_ss = ctx.datum.ss_part(&delta.lift);
    let b_form = WInvForm::from_alpha(cls.alpha.clone());
    let phi = crate::invforms::form_functional(&ctx.datum, p, &b_form, &d_ss);
    let psi: Vec<Rat> = cls.l_r.iter().zip(&phi).map(|(a, b)| a + b).collect();
    for g in ctx.datum.cochar.basis_cols() {
        let v: Rat = psi.iter().zip(&g).map(|(a, b)| a * b).sum();
        if !is_int(&v) {
            return Ok(false);
        }
    }
    // (b): b_R ⊥ b integral on pairs of cocharacters.
    let gram = triple_gram(ctx, cls);
    let gens = ctx.datum.cochar.basis_cols();
    for x in &gens {
        let gx = gram.mul_vec(x);
        for y in &gens {
            let v: Rat = gx.iter().zip(y).map(|(a, b)| a * b).sum();
            if !is_int(&v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Restriction of a stack NS class to the fixed-curve NS group:
/// ([chi], b) -> (chi on the radical, b on the radical, b on the coroots).
pub fn res_ns(ctx: &Context, delta: &Pi1Element, cls: &NsClass) -> Result<CurveNsClass> {
    let p = &ctx.parts;
    if !super::ns_membership(ctx, delta, cls, false)? {
        return Err(Error::InvalidParams("not a stack NS class".into()));
    }
    let l_r = ctx.datum.ab_part(&cls.chi);
    let gram = ambient_gram(&ctx.datum, p, &cls.form);
    let ur = p.lambda_r.basis_cols();
    let mut b_r = MatQ::zeros(p.ab_dim, p.ab_dim);
    for (i, x) in ur.iter().enumerate() {
        let gx = gram.mul_vec(x);
        for (j, y) in ur.iter().enumerate() {
            b_r[(i, j)] = gx.iter().zip(y).map(|(a, b)| a * b).sum();
        }
    }
    Ok(CurveNsClass { l_r, b_r, alpha: cls.form.alpha.clone() })
}
