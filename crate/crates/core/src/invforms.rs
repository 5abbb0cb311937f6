//! Lattices of Weyl-invariant symmetric bilinear forms on the cocharacter
//! lattice and its semisimple sublattices, the evaluation homomorphisms at a
//! component class, and their cokernels.
//!
//! A Weyl-invariant form has no cross terms between the abelian and
//! semisimple spans and restricts to a multiple of the basic form on each
//! simple factor, so it is parameterized by a symmetric matrix on the
//! character basis of G^ab plus one multiplier per factor. All six form
//! lattices are cut out of that parameter space by integrality and evenness
//! congruences on lattice generators (evenness on generators suffices for an
//! integral symmetric form since q(x+y) = q(x) + q(y) + 2b(x,y)).

use crate::error::{Error, Result};
use crate::exactalg::num::{rat, Rat};
use crate::exactalg::{congruence_lattice, Congruence, FgAbGroup, Int, Lattice, MatQ};
use crate::rootdata::{Parts, Pi1Element, ReductiveDatum};
use num::Zero;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FormKind {
    /// Integral W-invariant symmetric forms on the cocharacter lattice.
    Full,
    /// Full, and even on the cocharacter lattice.
    FullEven,
    /// Full, and even on the derived-subgroup sublattice.
    DEven,
    /// Forms on the derived-subgroup lattice, integral against the
    /// semisimplification lattice, even on the derived-subgroup lattice.
    PairEven,
    /// As PairEven but evenness required only on the coroot lattice.
    PairScEven,
    /// Integral even forms on the coroot lattice (spanned by the basic forms).
    ScEven,
}

impl FormKind {
    pub fn on_full_lattice(self) -> bool {
        matches!(self, FormKind::Full | FormKind::FullEven | FormKind::DEven)
    }

    pub fn name(self) -> &'static str {
        match self {
            FormKind::Full => "full",
            FormKind::FullEven => "full-even",
            FormKind::DEven => "derived-even",
            FormKind::PairEven => "pair-even",
            FormKind::PairScEven => "pair-sc-even",
            FormKind::ScEven => "sc-even",
        }
    }
}

/// A Weyl-invariant symmetric bilinear form: an abelian block on the
/// canonical character basis of G^ab (empty for the semisimple kinds) and
/// one multiplier of the basic form per simple factor.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WInvForm {
    pub ab_gram: MatQ,
    pub alpha: Vec<Rat>,
}

impl WInvForm {
    pub fn zero(parts: &Parts, datum: &ReductiveDatum, with_ab: bool) -> WInvForm {
        let s = if with_ab { parts.ab_dim } else { 0 };
        WInvForm { ab_gram: MatQ::zeros(s, s), alpha: vec![Rat::zero(); datum.num_factors()] }
    }

    pub fn has_ab_block(&self) -> bool {
        self.ab_gram.rows() > 0
    }

    /// Multiplier-only form (semisimple kinds).
    pub fn from_alpha(alpha: Vec<Rat>) -> WInvForm {
        WInvForm { ab_gram: MatQ::zeros(0, 0), alpha }
    }
}

/// Basis of one of the six form lattices, together with the parameter-space
/// lattice that computed it.
#[derive(Clone, Debug)]
pub struct FormLattice {
    pub kind: FormKind,
    pub basis: Vec<WInvForm>,
    pub params: Lattice,
}

impl FormLattice {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, parts: &Parts, form: &WInvForm) -> bool {
        self.params.contains(&params_from_form(parts, self.kind, form))
    }

    /// Integer combination of the basis.
    pub fn combination(&self, datum: &ReductiveDatum, parts: &Parts, coeffs: &[Int]) -> WInvForm {
        assert_eq!(coeffs.len(), self.basis.len());
        let dim = param_dim(parts, datum, self.kind);
        let mut p = vec![Rat::zero(); dim];
        for (c, b) in coeffs.iter().zip(&self.basis) {
            let bp = params_from_form(parts, self.kind, b);
            for (x, y) in p.iter_mut().zip(&bp) {
                *x += crate::exactalg::num::rat_of(c) * y;
            }
        }
        form_from_params(parts, datum, self.kind, &p)
    }
}

pub fn param_dim(parts: &Parts, datum: &ReductiveDatum, kind: FormKind) -> usize {
    let k = datum.num_factors();
    if kind.on_full_lattice() {
        let s = parts.ab_dim;
        s * (s + 1) / 2 + k
    } else {
        k
    }
}

fn ab_param_count(s: usize) -> usize {
    s * (s + 1) / 2
}

/// Parameter vector: upper triangle of the abelian block (row major),
/// then the factor multipliers.
pub fn params_from_form(parts: &Parts, kind: FormKind, form: &WInvForm) -> Vec<Rat> {
    let mut p = Vec::new();
    if kind.on_full_lattice() {
        let s = parts.ab_dim;
        assert_eq!(form.ab_gram.rows(), s);
        for i in 0..s {
            for j in i..s {
                p.push(form.ab_gram[(i, j)].clone());
            }
        }
    }
    p.extend(form.alpha.iter().cloned());
    p
}

pub fn form_from_params(
    parts: &Parts,
    datum: &ReductiveDatum,
    kind: FormKind,
    p: &[Rat],
) -> WInvForm {
    assert_eq!(p.len(), param_dim(parts, datum, kind));
    if kind.on_full_lattice() {
        let s = parts.ab_dim;
        let mut m = MatQ::zeros(s, s);
        let mut t = 0;
        for i in 0..s {
            for j in i..s {
                m[(i, j)] = p[t].clone();
                m[(j, i)] = p[t].clone();
                t += 1;
            }
        }
        WInvForm { ab_gram: m, alpha: p[t..].to_vec() }
    } else {
        WInvForm::from_alpha(p.to_vec())
    }
}

/// Gram matrix of the form on the ambient space (rational extension).
pub fn ambient_gram(datum: &ReductiveDatum, parts: &Parts, form: &WInvForm) -> MatQ {
    let m = parts.ambient;
    let mut g = MatQ::zeros(m, m);
    for (f, fac) in datum.factors.iter().enumerate() {
        let off = datum.factor_offset(f);
        let bq = fac.basic_gram.to_q();
        for a in 0..fac.rank {
            for b in 0..fac.rank {
                g[(off + a, off + b)] = &form.alpha[f] * &bq[(a, b)];
            }
        }
    }
    if form.has_ab_block() && parts.ab_dim > 0 {
        // Stored on the canonical basis U of Lambda(G^ab): ambient block is
        // U^{-T} M U^{-1}.
        let uinv = parts.ab_basis.inverse().expect("ab basis invertible");
        let amb = uinv.transpose().mul(&form.ab_gram).mul(&uinv);
        let off = parts.ss_dim;
        for a in 0..parts.ab_dim {
            for b in 0..parts.ab_dim {
                g[(off + a, off + b)] = amb[(a, b)].clone();
            }
        }
    }
    g
}

/// b(x, y) under the evaluation rule (cross terms vanish identically).
pub fn evaluate_form(
    datum: &ReductiveDatum,
    parts: &Parts,
    form: &WInvForm,
    x: &[Rat],
    y: &[Rat],
) -> Rat {
    let g = ambient_gram(datum, parts, form);
    let gy = g.mul_vec(y);
    x.iter().zip(&gy).map(|(a, b)| a * b).sum()
}

/// The linear functional b(x, -) as an ambient dual vector.
pub fn form_functional(
    datum: &ReductiveDatum,
    parts: &Parts,
    form: &WInvForm,
    x: &[Rat],
) -> Vec<Rat> {
    ambient_gram(datum, parts, form).mul_vec(x)
}

/// Coefficients, as a linear form on the parameter space, of p -> b_p(x, y).
fn condition_row(
    parts: &Parts,
    datum: &ReductiveDatum,
    kind: FormKind,
    x: &[Rat],
    y: &[Rat],
) -> Vec<Rat> {
    let mut row = Vec::with_capacity(param_dim(parts, datum, kind));
    if kind.on_full_lattice() {
        let s = parts.ab_dim;
        if s > 0 {
            // Coordinates of the abelian parts in the canonical basis.
            let ux = parts.ab_coords(&datum.p_ab(x)).expect("full-rank abelian block");
            let uy = parts.ab_coords(&datum.p_ab(y)).expect("full-rank abelian block");
            for i in 0..s {
                for j in i..s {
                    if i == j {
                        row.push(&ux[i] * &uy[i]);
                    } else {
                        row.push(&ux[i] * &uy[j] + &ux[j] * &uy[i]);
                    }
                }
            }
        }
    }
    for (f, fac) in datum.factors.iter().enumerate() {
        let off = datum.factor_offset(f);
        let bq = fac.basic_gram.to_q();
        let mut acc = Rat::zero();
        for a in 0..fac.rank {
            for b in 0..fac.rank {
                acc += &x[off + a] * &bq[(a, b)] * &y[off + b];
            }
        }
        row.push(acc);
    }
    row
}

/// Computes one of the six form lattices by congruence solving.
pub fn form_lattice(
    datum: &ReductiveDatum,
    parts: &Parts,
    kind: FormKind,
) -> Result<FormLattice> {
    let dim = param_dim(parts, datum, kind);
    let mut conds: Vec<Congruence> = Vec::new();
    let lambda_gens = datum.cochar.basis_cols();
    let d_gens = parts.lambda_d.basis_cols();
    let ss_gens = parts.lambda_ss.basis_cols();
    let mut coroots = Vec::new();
    for i in 0..parts.ss_dim {
        let mut v = vec![Rat::zero(); parts.ambient];
        v[i] = rat(1);
        coroots.push(v);
    }
    let integral_on_pairs = |conds: &mut Vec<Congruence>, a: &[Vec<Rat>], b: &[Vec<Rat>]| {
        for x in a {
            for y in b {
                conds.push(Congruence::integral(condition_row(parts, datum, kind, x, y)));
            }
        }
    };
    let even_on = |conds: &mut Vec<Congruence>, a: &[Vec<Rat>]| {
        for x in a {
            conds.push(Congruence::even(condition_row(parts, datum, kind, x, x)));
        }
    };
    match kind {
        FormKind::Full => {
            integral_on_pairs(&mut conds, &lambda_gens, &lambda_gens);
        }
        FormKind::FullEven => {
            integral_on_pairs(&mut conds, &lambda_gens, &lambda_gens);
            even_on(&mut conds, &lambda_gens);
        }
        FormKind::DEven => {
            integral_on_pairs(&mut conds, &lambda_gens, &lambda_gens);
            even_on(&mut conds, &d_gens);
        }
        FormKind::PairEven => {
            integral_on_pairs(&mut conds, &d_gens, &d_gens);
            integral_on_pairs(&mut conds, &d_gens, &ss_gens);
            even_on(&mut conds, &d_gens);
        }
        FormKind::PairScEven => {
            integral_on_pairs(&mut conds, &d_gens, &d_gens);
            integral_on_pairs(&mut conds, &d_gens, &ss_gens);
            even_on(&mut conds, &coroots);
        }
        FormKind::ScEven => {
            integral_on_pairs(&mut conds, &coroots, &coroots);
            even_on(&mut conds, &coroots);
        }
    }
    let params = congruence_lattice(dim, &conds);
    let basis = params
        .basis_cols()
        .iter()
        .map(|p| form_from_params(parts, datum, kind, p))
        .collect::<Vec<_>>();
    let expected = expected_rank(parts, datum, kind);
    if basis.len() != expected {
        return Err(Error::InvalidDatum(format!(
            "{} form lattice has rank {}, expected {}",
            kind.name(),
            basis.len(),
            expected
        )));
    }
    Ok(FormLattice { kind, basis, params })
}

/// Rank predicted by the structure of the invariant-form decomposition.
pub fn expected_rank(parts: &Parts, datum: &ReductiveDatum, kind: FormKind) -> usize {
    let k = datum.num_factors();
    if kind.on_full_lattice() {
        ab_param_count(parts.ab_dim) + k
    } else {
        k
    }
}

/// All six lattices, computed once.
#[derive(Clone, Debug)]
pub struct Forms {
    pub full: FormLattice,
    pub full_even: FormLattice,
    pub d_even: FormLattice,
    pub pair_even: FormLattice,
    pub pair_sc_even: FormLattice,
    pub sc_even: FormLattice,
}

pub fn all_form_lattices(datum: &ReductiveDatum, parts: &Parts) -> Result<Forms> {
    Ok(Forms {
        full: form_lattice(datum, parts, FormKind::Full)?,
        full_even: form_lattice(datum, parts, FormKind::FullEven)?,
        d_even: form_lattice(datum, parts, FormKind::DEven)?,
        pair_even: form_lattice(datum, parts, FormKind::PairEven)?,
        pair_sc_even: form_lattice(datum, parts, FormKind::PairScEven)?,
        sc_even: form_lattice(datum, parts, FormKind::ScEven)?,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EvVariant {
    /// On the pair-even lattice.
    Ev,
    /// The extension to the pair-sc-even lattice.
    EvTilde,
}

/// The evaluation homomorphism at a component class: each basis form b maps
/// to the class of b(d^ss ⊗ -) restricted to the derived-subgroup lattice,
/// inside characters of the derived subgroup's center.
#[derive(Clone, Debug)]
pub struct EvHom {
    pub variant: EvVariant,
    /// Image classes of the basis forms, in the canonical coordinates of
    /// dcenter_chars.
    pub images: Vec<Vec<Int>>,
    pub image_subgroup: FgAbGroup,
    pub cokernel: FgAbGroup,
}

pub fn ev_hom(
    datum: &ReductiveDatum,
    parts: &Parts,
    forms: &Forms,
    delta: &Pi1Element,
    variant: EvVariant,
) -> Result<EvHom> {
    let lattice = match variant {
        EvVariant::Ev => &forms.pair_even,
        EvVariant::EvTilde => &forms.pair_sc_even,
    };
    let d_ss = datum.ss_part(&delta.lift);
    let mut images = Vec::new();
    let mut functionals = Vec::new();
    for b in &lattice.basis {
        let phi = form_functional(datum, parts, b, &d_ss);
        if !parts.dual_d.contains(&phi) {
            return Err(Error::NonIntegralEvaluation);
        }
        images.push(parts.dcenter_chars.class(&phi)?);
        functionals.push(phi);
    }
    let (image_subgroup, cokernel) =
        parts.dcenter_chars.subgroup_cokernel(&parts.dual_ad, &functionals)?;
    Ok(EvHom { variant, images, image_subgroup, cokernel })
}

/// Cokernel of the inclusion of pair-even forms into pair-sc-even forms;
/// always elementary 2-abelian with at most one factor per simple factor.
pub fn coker_r_g(forms: &Forms) -> Result<FgAbGroup> {
    let q = crate::exactalg::quotient_group(&forms.pair_sc_even.params, &forms.pair_even.params)?;
    debug_assert!(q.is_elementary_2() || q.is_trivial());
    Ok(q)
}

/// Pulls a form back along a cocharacter-lattice map Lambda(T_H) -> Lambda(T_G)
/// (an ambient_G x ambient_H matrix) and re-expresses it on the source.
pub fn pullback_form(
    phi: &MatQ,
    form: &WInvForm,
    target: (&ReductiveDatum, &Parts),
    source: (&ReductiveDatum, &Parts),
) -> Result<WInvForm> {
    let (tg, tp) = target;
    let (sg, sp) = source;
    assert_eq!(phi.rows(), tp.ambient);
    assert_eq!(phi.cols(), sp.ambient);
    let g = ambient_gram(tg, tp, form);
    let pulled = phi.transpose().mul(&g.mul(phi));
    // Factor blocks must be multiples of the source basic forms, with no
    // cross terms between blocks.
    let mut alpha = Vec::new();
    for (f, fac) in sg.factors.iter().enumerate() {
        let off = sg.factor_offset(f);
        let b = fac.basic_gram.to_q();
        // Find the multiplier from a nonzero Gram entry (the diagonal works).
        let a = &pulled[(off, off)] / &b[(0, 0)];
        for p in 0..fac.rank {
            for q in 0..fac.rank {
                if pulled[(off + p, off + q)] != &a * &b[(p, q)] {
                    return Err(Error::NotWInvariantPullback);
                }
            }
        }
        alpha.push(a);
    }
    // Cross blocks: everything off the factor/ab diagonal blocks must vanish.
    let block_of = |i: usize| -> usize {
        // block index: factor number, or factors+0 for the abelian block
        let mut acc = 0;
        for (f, fac) in sg.factors.iter().enumerate() {
            if i < acc + fac.rank {
                return f;
            }
            acc += fac.rank;
        }
        sg.num_factors()
    };
    for i in 0..sp.ambient {
        for j in 0..sp.ambient {
            if block_of(i) != block_of(j) && !pulled[(i, j)].is_zero() {
                return Err(Error::NotWInvariantPullback);
            }
        }
    }
    // The pulled-back form always carries the source abelian block (a
    // semisimple-kind form extends by zero, and its pullback can be nonzero
    // on the source abelian directions).
    let ab_gram = {
        let mut amb = MatQ::zeros(sp.ab_dim, sp.ab_dim);
        for a in 0..sp.ab_dim {
            for b in 0..sp.ab_dim {
                amb[(a, b)] = pulled[(sp.ss_dim + a, sp.ss_dim + b)].clone();
            }
        }
        let u = &sp.ab_basis;
        u.transpose().mul(&amb.mul(u))
    };
    Ok(WInvForm { ab_gram, alpha })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::num::{int, ratio};
    use crate::rootdata::{build_named, derive_parts, pi1_class, pi1_zero};

    fn setup(spec: &str) -> (ReductiveDatum, Parts, Forms) {
        let d = build_named(spec).unwrap();
        let p = derive_parts(&d).unwrap();
        let f = all_form_lattices(&d, &p).unwrap();
        (d, p, f)
    }

    #[test]
    fn pgl2_multipliers() {
        let (_, _, f) = setup("PGL:2");
        assert_eq!(f.pair_sc_even.basis[0].alpha, vec![rat(2)]);
        assert_eq!(f.pair_even.basis[0].alpha, vec![rat(4)]);
        assert_eq!(f.sc_even.basis[0].alpha, vec![rat(1)]);
    }

    #[test]
    fn sp_basic_is_generator() {
        let (_, _, f) = setup("Sp:6");
        assert_eq!(f.sc_even.basis[0].alpha, vec![rat(1)]);
        assert_eq!(f.pair_even.basis[0].alpha, vec![rat(1)]);
    }

    #[test]
    fn torus_full_lattice_is_symmetric_matrices() {
        let (_, p, f) = setup("torus:2");
        assert_eq!(f.full.rank(), 3);
        // Exactly the integral symmetric matrices on the standard basis.
        for b in &f.full.basis {
            for i in 0..2 {
                for j in 0..2 {
                    assert!(crate::exactalg::num::is_int(&b.ab_gram[(i, j)]));
                }
            }
        }
        assert_eq!(f.full_even.rank(), 3);
        assert_eq!(p.ab_dim, 2);
    }

    #[test]
    fn evaluation_examples() {
        // Basic form on A1 takes value 2 on the coroot.
        let (d, p, f) = setup("SL:2");
        let basic = &f.sc_even.basis[0];
        assert_eq!(evaluate_form(&d, &p, basic, &[rat(1)], &[rat(1)]), rat(2));
        assert_eq!(evaluate_form(&d, &p, basic, &[rat(0)], &[rat(1)]), rat(0));
        // Pair-sc-even generator of PGL2 at (w1, w1): 2 * 2 / 4 = 1.
        let (d, p, f) = setup("PGL:2");
        let g = &f.pair_sc_even.basis[0];
        let w1 = [ratio(1, 2)];
        assert_eq!(evaluate_form(&d, &p, g, &w1, &w1), rat(1));
    }

    #[test]
    fn ev_cokernels_small_cases() {
        // SL:n with delta = 0: cokernel Z/n.
        for n in 2..=5i64 {
            let (d, p, f) = setup(&format!("SL:{}", n));
            let delta = pi1_zero(&d, &p);
            let ev = ev_hom(&d, &p, &f, &delta, EvVariant::Ev).unwrap();
            assert_eq!(ev.cokernel, FgAbGroup::cyclic(&int(n)), "n = {}", n);
        }
        // GL:n with degree-d class: coker(ev-tilde) = Z/gcd(n, d).
        for (n, dd, want) in [(4i64, 1i64, 1i64), (4, 2, 2), (6, 4, 2), (6, 3, 3)] {
            let spec = format!("GL:{}", n);
            let (d, p, f) = setup(&spec);
            let lift =
                crate::rootdata::parse_group_spec(&spec).unwrap().delta_lift(dd).unwrap();
            let delta = pi1_class(&d, &p, &lift).unwrap();
            let ev = ev_hom(&d, &p, &f, &delta, EvVariant::EvTilde).unwrap();
            let expect = if want == 1 {
                FgAbGroup::trivial()
            } else {
                FgAbGroup::cyclic(&int(want))
            };
            assert_eq!(ev.cokernel, expect, "GL:{} degree {}", n, dd);
        }
        // Spin:8 with delta = 0: coker(ev-tilde) = Z/2 x Z/2.
        let (d, p, f) = setup("Spin:8");
        let delta = pi1_zero(&d, &p);
        let ev = ev_hom(&d, &p, &f, &delta, EvVariant::EvTilde).unwrap();
        assert_eq!(ev.cokernel.to_string(), "Z/2 x Z/2");
    }

    #[test]
    fn coker_r_g_examples() {
        let (_, _, f) = setup("SO:11");
        assert_eq!(coker_r_g(&f).unwrap().to_string(), "Z/2");
        let (_, _, f) = setup("E7ad");
        assert_eq!(coker_r_g(&f).unwrap().to_string(), "Z/2");
        let (_, _, f) = setup("F4");
        assert!(coker_r_g(&f).unwrap().is_trivial());
    }

    #[test]
    fn restriction_surjects_onto_pair_lattices() {
        // The derived-even forms restrict onto exactly the pair-even lattice,
        // and the full-even forms do too.
        for spec in ["GL:3", "torus:1 x Sp:4", "C[mu:2](SL:4/mu:2)", "SO:10"] {
            let (d, _p, f) = setup(spec);
            for from in [&f.d_even, &f.full_even] {
                let cols: Vec<Vec<Rat>> =
                    from.basis.iter().map(|b| b.alpha.clone()).collect();
                let image = Lattice::from_cols(d.num_factors(), &cols);
                assert_eq!(image, f.pair_even.params, "restriction image for {}", spec);
            }
            // Chain full_even ⊆ d_even ⊆ full with finite index.
            assert!(f.full_even.params.is_sublattice_of(&f.d_even.params), "{}", spec);
            assert!(f.d_even.params.is_sublattice_of(&f.full.params), "{}", spec);
            assert_eq!(f.full_even.rank(), f.full.rank(), "{}", spec);
        }
    }

    #[test]
    fn evenness_on_generators_matches_full_orbit() {
        // For small data, a form integral on the lattice and even on a basis
        // is even on a sample of the whole lattice.
        let (d, p, f) = setup("GL:2");
        for b in &f.full_even.basis {
            for x0 in -3i64..=3 {
                for x1 in -3i64..=3 {
                    let v: Vec<Rat> = d
                        .cochar
                        .basis()
                        .mul_vec(&[rat(x0), rat(x1)]);
                    let q = evaluate_form(&d, &p, b, &v, &v);
                    assert!(crate::exactalg::num::is_int(&q));
                    assert!((q.numer() % int(2)).is_zero(), "odd value");
                }
            }
        }
    }

    #[test]
    fn pullback_identity_and_torus_restriction() {
        let (d, p, f) = setup("SL:2");
        let basic = f.sc_even.basis[0].clone();
        let id = MatQ::identity(1);
        let back = pullback_form(&id, &basic, (&d, &p), (&d, &p)).unwrap();
        assert_eq!(back, basic);
        // Restrict along the diagonal torus of SL2: the even form 2xy-pattern.
        let t = build_named("torus:1").unwrap();
        let tp = derive_parts(&t).unwrap();
        let incl = MatQ::from_rows(&[vec![rat(1)]]);
        let restricted = pullback_form(&incl, &basic, (&d, &p), (&t, &tp)).unwrap();
        assert_eq!(restricted.ab_gram[(0, 0)], rat(2));
    }

    #[test]
    fn ev_lift_independence() {
        let (d, p, f) = setup("C[mu:2](SL:4/mu:2)");
        let spec = crate::rootdata::parse_group_spec("C[mu:2](SL:4/mu:2)").unwrap();
        let lift = spec.delta_lift(3).unwrap();
        let delta = pi1_class(&d, &p, &lift).unwrap();
        let ev1 = ev_hom(&d, &p, &f, &delta, EvVariant::Ev).unwrap();
        // Perturb the lift by coroots.
        let mut lift2 = lift.clone();
        lift2[0] += rat(5);
        lift2[2] -= rat(2);
        let delta2 = pi1_class(&d, &p, &lift2).unwrap();
        let ev2 = ev_hom(&d, &p, &f, &delta2, EvVariant::Ev).unwrap();
        assert_eq!(ev1.images, ev2.images);
        assert_eq!(ev1.cokernel, ev2.cokernel);
    }
}
