//! Presentations of the relative Picard group of the universal moduli stack
//! of bundles, its Neron-Severi quotients, the rigidification, and the
//! cokernels measuring the image of the obstruction map and the failure of
//! restriction surjectivity.

mod curve;
mod report;
#[cfg(test)]
mod tests;

pub use curve::{curve_ns_membership, curve_ns_rank, res_ns, CurveNsClass};
pub use report::{ClReport, PicardReport};

use crate::error::{Error, Result};
use crate::exactalg::num::{int, is_int, rat_of, to_int, Int, Rat};
use crate::exactalg::{
    congruence_lattice, Congruence, FgAbGroup, Lattice, LatticeQuotient, MatQ, MatZ,
};
use crate::invforms::{
    all_form_lattices, ambient_gram, form_functional, EvVariant, FormLattice, Forms, WInvForm,
};
use crate::rootdata::{derive_parts, Parts, Pi1Element, ReductiveDatum};
use num::{One, Zero};

/// A datum with its derived lattices and form lattices, computed once.
#[derive(Clone, Debug)]
pub struct Context {
    pub datum: ReductiveDatum,
    pub parts: Parts,
    pub forms: Forms,
}

impl Context {
    pub fn new(datum: ReductiveDatum) -> Result<Context> {
        let parts = derive_parts(&datum)?;
        let forms = all_form_lattices(&datum, &parts)?;
        Ok(Context { datum, parts, forms })
    }

    pub fn from_spec(spec: &str) -> Result<Context> {
        Context::new(crate::rootdata::build_named(spec)?)
    }

    /// dim G^ab.
    pub fn s(&self) -> usize {
        self.parts.ab_dim
    }

    /// Number of simple factors.
    pub fn k(&self) -> usize {
        self.datum.num_factors()
    }

    pub fn ev(&self, delta: &Pi1Element, variant: EvVariant) -> Result<crate::invforms::EvHom> {
        crate::invforms::ev_hom(&self.datum, &self.parts, &self.forms, delta, variant)
    }

    pub fn pi1_class(&self, lift: &[Rat]) -> Result<Pi1Element> {
        crate::rootdata::pi1_class(&self.datum, &self.parts, lift)
    }

    pub fn pi1_zero(&self) -> Pi1Element {
        crate::rootdata::pi1_zero(&self.datum, &self.parts)
    }
}

/// Genus and marked points, with the two auxiliary groups they determine.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MarkedGenus {
    pub g: usize,
    pub n: usize,
}

impl MarkedGenus {
    pub fn new(g: usize, n: usize) -> MarkedGenus {
        MarkedGenus { g, n }
    }

    pub fn two_g_minus_2(&self) -> i64 {
        2 * (self.g as i64) - 2
    }

    fn require_positive_genus(&self) -> Result<()> {
        if self.g == 0 {
            return Err(Error::Genus0NotHere);
        }
        Ok(())
    }

    /// Z + Z^n for g >= 2, Z^n for g = 1.
    pub fn h_hat_rank(&self) -> Result<usize> {
        self.require_positive_genus()?;
        Ok(if self.g >= 2 { 1 + self.n } else { self.n })
    }

    /// Kernel rank of (m, z) -> (2g-2) m + |z| (or |z| for g = 1).
    pub fn h_rank(&self) -> Result<usize> {
        self.require_positive_genus()?;
        Ok(if self.g >= 2 { self.n } else { self.n.saturating_sub(1) })
    }

    /// Basis of the kernel lattice, as columns.
    pub fn h_basis(&self) -> Result<MatZ> {
        self.require_positive_genus()?;
        let mut row = Vec::new();
        if self.g >= 2 {
            row.push(self.two_g_minus_2());
        }
        row.extend(std::iter::repeat_n(1, self.n));
        let m = MatZ::from_rows(&[row]);
        Ok(m.kernel())
    }
}

/// An element of the Neron-Severi group of the moduli stack: a character
/// class (as an explicit functional) and a derived-even invariant form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NsClass {
    pub chi: Vec<Rat>,
    pub form: WInvForm,
}

/// Free rank of NS of the stack: s + rank of the derived-even form lattice.
pub fn ns_bun_rank(ctx: &Context) -> usize {
    ctx.s() + ctx.forms.d_even.rank()
}

/// Coefficient lattice (in the derived-even basis) of the forms whose
/// evaluation class at delta vanishes; this is NS of the rigidification.
pub fn ns_rig_lattice(ctx: &Context, delta: &Pi1Element) -> Result<Lattice> {
    let d_even = &ctx.forms.d_even;
    let p = d_even.rank();
    let d_ss = ctx.datum.ss_part(&delta.lift);
    let mut classes = Vec::new();
    for b in &d_even.basis {
        let phi = form_functional(&ctx.datum, &ctx.parts, b, &d_ss);
        classes.push(ctx.parts.dcenter_chars.class(&phi)?);
    }
    let factors = ctx.parts.dcenter_chars.factors().to_vec();
    let mut conds = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        if f.is_one() {
            continue;
        }
        debug_assert!(!f.is_zero(), "derived center characters are finite");
        let row: Vec<Rat> = classes.iter().map(|c| Rat::new(c[i].clone(), f.clone())).collect();
        conds.push(Congruence::integral(row));
    }
    Ok(congruence_lattice(p, &conds))
}

pub fn ns_rig_rank(ctx: &Context, delta: &Pi1Element) -> Result<usize> {
    Ok(ns_rig_lattice(ctx, delta)?.rank())
}

/// The canonical representative of the character class of an NS element:
/// the unique lift agreeing with b(d ⊗ -) on the derived-subgroup lattice.
/// Errors with FormNotDEven when the form is outside the derived-even
/// lattice; returns None when the pair fails the NS compatibility.
pub fn canonical_rep(
    ctx: &Context,
    delta: &Pi1Element,
    cls: &NsClass,
) -> Result<Option<Vec<Rat>>> {
    if !ctx.forms.d_even.contains(&ctx.parts, &cls.form) {
        return Err(Error::FormNotDEven);
    }
    if !ctx.parts.dual_lambda.contains(&cls.chi) {
        return Err(Error::NotInLattice);
    }
    let phi = form_functional(&ctx.datum, &ctx.parts, &cls.form, &delta.lift);
    // Candidate canonical representative: b(d ⊗ -) on the semisimple block,
    // the given character on the abelian block.
    let mut rep = cls.chi.clone();
    rep[..ctx.parts.ss_dim].clone_from_slice(&phi[..ctx.parts.ss_dim]);
    // It differs from chi by an adjoint character iff the pair is compatible.
    let diff: Vec<Rat> = rep.iter().zip(&cls.chi).map(|(a, b)| a - b).collect();
    if ctx.parts.dual_ad.contains(&diff) {
        Ok(Some(rep))
    } else {
        Ok(None)
    }
}

/// Membership in NS of the stack (or of the rigidification, which ignores
/// the character and asks the evaluation class of the form to vanish).
pub fn ns_membership(
    ctx: &Context,
    delta: &Pi1Element,
    cls: &NsClass,
    rigidified: bool,
) -> Result<bool> {
    if rigidified {
        if !ctx.forms.d_even.contains(&ctx.parts, &cls.form) {
            return Err(Error::FormNotDEven);
        }
        let phi = form_functional(&ctx.datum, &ctx.parts, &cls.form, &delta.lift);
        let phi_ss = ctx.datum.ss_part(&phi);
        return Ok(ctx.parts.dual_ad.contains(&phi_ss));
    }
    Ok(canonical_rep(ctx, delta, cls)?.is_some())
}

/// Pull-back of NS classes along a homomorphism, given by the induced map
/// of cocharacter lattices and a source component class mapping to delta.
pub fn ns_pullback(
    phi: &MatQ,
    target: &Context,
    source: &Context,
    eps: &Pi1Element,
    cls: &NsClass,
) -> Result<NsClass> {
    let d = phi.mul_vec(&eps.lift);
    if !target.datum.cochar.contains(&d) {
        return Err(Error::IncompatibleDelta);
    }
    let delta = target.pi1_class(&d)?;
    let rep = canonical_rep(target, &delta, cls)?.ok_or(Error::IncompatibleDelta)?;
    let chi = phi.transpose().mul_vec(&rep);
    let form = crate::invforms::pullback_form(
        phi,
        &cls.form,
        (&target.datum, &target.parts),
        (&source.datum, &source.parts),
    )?;
    Ok(NsClass { chi, form })
}

/// Integral lift to the cocharacter lattice of the i-th canonical basis
/// vector of Lambda(G^ab).
fn ab_basis_lift(ctx: &Context, i: usize) -> Vec<Rat> {
    let p = &ctx.parts;
    let m = p.ambient;
    let r = ctx.datum.cochar.rank();
    // Rows: coordinates in the canonical ab basis of the projections of the
    // cocharacter basis vectors.
    let mut w = MatZ::zeros(p.ab_dim, r);
    for (j, col) in ctx.datum.cochar.basis_cols().iter().enumerate() {
        let coords = p.ab_coords(&ctx.datum.p_ab(col)).expect("full rank");
        for (i2, c) in coords.iter().enumerate() {
            w[(i2, j)] = to_int(c).expect("abelianization coordinates are integral");
        }
    }
    let mut target = vec![Int::zero(); p.ab_dim];
    target[i] = Int::one();
    let c = w.solve(&target).expect("abelianization is surjective");
    let cq: Vec<Rat> = c.iter().map(rat_of).collect();
    let lift = ctx.datum.cochar.basis().mul_vec(&cq);
    debug_assert_eq!(lift.len(), m);
    lift
}

/// The divisibility bracket E(x) = chi_d(x) - b(d ⊗ x) + (g-1) b(x ⊗ x)
/// evaluated with a canonical representative; an integer for NS members.
fn boundary_bracket(
    ctx: &Context,
    g: usize,
    delta: &Pi1Element,
    rep: &[Rat],
    form: &WInvForm,
    x: &[Rat],
) -> Int {
    let gram = ambient_gram(&ctx.datum, &ctx.parts, form);
    let bdx: Rat = gram.mul_vec(&delta.lift).iter().zip(x).map(|(a, b)| a * b).sum();
    let bxx: Rat = gram.mul_vec(x).iter().zip(x).map(|(a, b)| a * b).sum();
    let chix: Rat = rep.iter().zip(x).map(|(a, b)| a * b).sum();
    let val = chix - bdx + rat_of(&int(g as i64 - 1)) * bxx;
    debug_assert!(is_int(&val));
    val.numer().clone()
}

/// The image of the Picard group inside NS (or inside NS of the
/// rigidification): invariant factors of the inclusion and the quotient.
#[derive(Clone, Debug)]
pub struct ImOmegaGamma {
    pub rigidified: bool,
    pub ns_rank: usize,
    /// Invariant factors of the image sublattice, largest first (including
    /// unit factors; zeros indicate free quotient directions).
    pub inclusion_factors: Vec<Int>,
    pub quotient: FgAbGroup,
}

/// Boundary matrix of the divisibility condition on a basis of NS (columns)
/// against lifts of the canonical Lambda(G^ab) basis (rows).
fn boundary_matrix(
    ctx: &Context,
    mg: &MarkedGenus,
    delta: &Pi1Element,
    columns: &[(Vec<Rat>, WInvForm)],
) -> MatZ {
    let s = ctx.s();
    let lifts: Vec<Vec<Rat>> = (0..s).map(|i| ab_basis_lift(ctx, i)).collect();
    let mut beta = MatZ::zeros(s, columns.len());
    for (j, (rep, form)) in columns.iter().enumerate() {
        for (i, x) in lifts.iter().enumerate() {
            beta[(i, j)] = boundary_bracket(ctx, mg.g, delta, rep, form, x);
        }
    }
    beta
}

/// Kernel of beta mod (2g-2) as a sublattice of Z^cols; for g = 1 the
/// condition is exact vanishing.
fn kernel_mod(beta: &MatZ, two_g_minus_2: i64) -> Lattice {
    let cols = beta.cols();
    if beta.rows() == 0 {
        return Lattice::standard(cols);
    }
    if two_g_minus_2 == 0 {
        let k = beta.kernel();
        let colsv: Vec<Vec<Rat>> =
            (0..k.cols()).map(|j| k.col(j).iter().map(rat_of).collect()).collect();
        return Lattice::from_cols(cols, &colsv);
    }
    let m = rat_of(&int(two_g_minus_2));
    let mut conds = Vec::new();
    for i in 0..beta.rows() {
        let row: Vec<Rat> = (0..cols).map(|j| rat_of(&beta[(i, j)]) / &m).collect();
        conds.push(Congruence::integral(row));
    }
    congruence_lattice(cols, &conds)
}

/// Invariant factors (largest first) of a full set of sublattice generators
/// inside Z^rank.
fn inclusion_factors(sub: &Lattice, rank: usize) -> Vec<Int> {
    let (z, d) = sub.basis().clear_denominators();
    debug_assert!(d.is_one(), "sublattice of Z^n expected");
    let snf = z.snf();
    let mut fs = snf.diag;
    fs.resize(rank, Int::zero());
    fs.sort_by(|a, b| match (a.is_zero(), b.is_zero()) {
        (true, true) => std::cmp::Ordering::Equal,
        (true, false) => std::cmp::Ordering::Less,
        (false, true) => std::cmp::Ordering::Greater,
        (false, false) => b.cmp(a),
    });
    fs
}

/// NS basis for the non-rigidified case: abelian character classes and the
/// derived-even basis forms paired with their tautological characters.
fn ns_basis(ctx: &Context, delta: &Pi1Element) -> Vec<(Vec<Rat>, WInvForm)> {
    let s = ctx.s();
    let mut out = Vec::new();
    for i in 0..s {
        out.push((
            ctx.parts.ab_char(i),
            WInvForm::zero(&ctx.parts, &ctx.datum, true),
        ));
    }
    for b in &ctx.forms.d_even.basis {
        let rep = form_functional(&ctx.datum, &ctx.parts, b, &delta.lift);
        out.push((rep, b.clone()));
    }
    out
}

/// NS(rig) basis: kernel combinations of the derived-even basis, with the
/// canonical adjoint-character representative for the bracket.
fn ns_rig_basis(ctx: &Context, delta: &Pi1Element) -> Result<Vec<(Vec<Rat>, WInvForm)>> {
    let k0 = ns_rig_lattice(ctx, delta)?;
    let mut out = Vec::new();
    for c in k0.basis_cols() {
        let mut coeffs = Vec::new();
        for x in &c {
            coeffs.push(to_int(x).expect("integer coefficients"));
        }
        let form = ctx.forms.d_even.combination(&ctx.datum, &ctx.parts, &coeffs);
        // Canonical representative of the zero character class: the adjoint
        // character agreeing with b(d ⊗ -) on the derived lattice.
        let phi = form_functional(&ctx.datum, &ctx.parts, &form, &delta.lift);
        let rep = ctx.datum.ss_part(&phi);
        out.push((rep, form));
    }
    Ok(out)
}

pub fn im_omega_gamma(
    ctx: &Context,
    mg: &MarkedGenus,
    delta: &Pi1Element,
    rigidified: bool,
) -> Result<ImOmegaGamma> {
    if mg.g == 0 {
        return Err(Error::GenusOutOfRange("image computation needs genus >= 1".into()));
    }
    let columns =
        if rigidified { ns_rig_basis(ctx, delta)? } else { ns_basis(ctx, delta) };
    let rank = columns.len();
    let image = if mg.n >= 1 {
        Lattice::standard(rank)
    } else {
        let beta = boundary_matrix(ctx, mg, delta, &columns);
        kernel_mod(&beta, mg.two_g_minus_2())
    };
    let factors = inclusion_factors(&image, rank);
    let quotient = crate::exactalg::quotient_group(&Lattice::standard(rank), &image)?;
    Ok(ImOmegaGamma { rigidified, ns_rank: rank, inclusion_factors: factors, quotient })
}

/// Membership of a single NS class in the image of the Picard group.
pub fn im_contains(
    ctx: &Context,
    mg: &MarkedGenus,
    delta: &Pi1Element,
    cls: &NsClass,
    rigidified: bool,
) -> Result<bool> {
    if mg.g == 0 {
        return Err(Error::GenusOutOfRange("image membership needs genus >= 1".into()));
    }
    let rep = if rigidified {
        if !ns_membership(ctx, delta, cls, true)? {
            return Ok(false);
        }
        let phi = form_functional(&ctx.datum, &ctx.parts, &cls.form, &delta.lift);
        ctx.datum.ss_part(&phi)
    } else {
        match canonical_rep(ctx, delta, cls)? {
            Some(r) => r,
            None => return Ok(false),
        }
    };
    if mg.n >= 1 {
        return Ok(true);
    }
    let m = mg.two_g_minus_2();
    for i in 0..ctx.s() {
        let x = ab_basis_lift(ctx, i);
        let e = boundary_bracket(ctx, mg.g, delta, &rep, &cls.form, &x);
        let ok = if m == 0 { e.is_zero() } else { (&e % int(m)).is_zero() };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rank bookkeeping for the relative Picard group of the stack.
#[derive(Clone, Debug)]
pub struct RPicReport {
    pub free_rank: usize,
    /// Rank of the tautological kernel piece.
    pub kernel_rank: usize,
    /// Rank of the derived-even form quotient.
    pub dev_rank: usize,
    /// Rank of the abelianization subgroup.
    pub ab_subgroup_rank: usize,
    /// Rank of the pair-even quotient.
    pub pair_rank: usize,
}

pub fn rpic_report(ctx: &Context, mg: &MarkedGenus, _delta: &Pi1Element) -> Result<RPicReport> {
    if mg.g == 0 {
        return Err(Error::GenusOutOfRange("this presentation needs genus >= 1".into()));
    }
    let s = ctx.s();
    let h_hat = mg.h_hat_rank()?;
    let kernel_rank = s * h_hat;
    let dev_rank = ctx.forms.d_even.rank();
    let pair_rank = ctx.forms.pair_even.rank();
    Ok(RPicReport {
        free_rank: kernel_rank + dev_rank,
        kernel_rank,
        dev_rank,
        ab_subgroup_rank: kernel_rank + dev_rank - pair_rank,
        pair_rank,
    })
}

/// Free rank of the relative Picard group of the rigidification.
pub fn rpic_rig_rank(ctx: &Context, mg: &MarkedGenus, delta: &Pi1Element) -> Result<usize> {
    if mg.g == 0 {
        return Err(Error::GenusOutOfRange("this presentation needs genus >= 1".into()));
    }
    Ok(ctx.s() * mg.h_rank()? + ns_rig_rank(ctx, delta)?)
}

/// The weight-homomorphism cokernel, with the pieces of the unmarked-case
/// exact sequence.
#[derive(Clone, Debug)]
pub struct CokerOmega {
    pub coker: FgAbGroup,
    pub coker_ev: FgAbGroup,
    /// Only for n = 0: the image of the boundary map (isomorphic to the
    /// cokernel of the rigidified-image map) and the Hom piece.
    pub gamma_bar_piece: Option<FgAbGroup>,
    pub hom_piece: Option<FgAbGroup>,
    pub extension_unresolved: bool,
}

/// Generators of the image of the weight homomorphism inside the character
/// group of the center, computed directly from the tautological and
/// transgression generators.
fn weight_image_generators(
    ctx: &Context,
    mg: &MarkedGenus,
    delta: &Pi1Element,
) -> Vec<Vec<Rat>> {
    let s = ctx.s();
    let mut gens: Vec<Vec<Rat>> = Vec::new();
    // Transgression part: evaluation functionals of a full-even basis.
    for b in &ctx.forms.full_even.basis {
        gens.push(form_functional(&ctx.datum, &ctx.parts, b, &delta.lift));
    }
    // Tautological part, through the abelianization.
    let e = |i: usize| ctx.parts.ab_char(i);
    let scaled = |v: &[Rat], c: &Int| -> Vec<Rat> {
        v.iter().map(|x| x * rat_of(c)).collect()
    };
    let add = |a: &[Rat], b: &[Rat]| -> Vec<Rat> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    };
    let deltas: Vec<Int> = (0..s).map(|i| delta.ab_coords[i].clone()).collect();
    for i in 0..s {
        if mg.n >= 1 {
            gens.push(e(i));
        }
        // Determinant-of-cohomology generators.
        let c = &deltas[i] + int(1 - mg.g as i64);
        gens.push(scaled(&e(i), &c));
        // Diagonal pairings exist only in genus >= 2.
        if mg.g >= 2 {
            gens.push(scaled(&e(i), &(&deltas[i] * int(2))));
        }
        for k in i + 1..s {
            gens.push(add(&scaled(&e(i), &deltas[k]), &scaled(&e(k), &deltas[i])));
        }
    }
    gens
}

pub fn coker_omega(ctx: &Context, mg: &MarkedGenus, delta: &Pi1Element) -> Result<CokerOmega> {
    if mg.g == 0 {
        return Err(Error::GenusOutOfRange("the weight cokernel needs genus >= 1".into()));
    }
    let gens = weight_image_generators(ctx, mg, delta);
    let (_, coker) = ctx.parts.center_chars.subgroup_cokernel(&ctx.parts.dual_ad, &gens)?;
    let coker_ev = ctx.ev(delta, EvVariant::Ev)?.cokernel;
    let (gamma_bar_piece, hom_piece, extension_unresolved) = if mg.n == 0 {
        let gb = coker_gamma_bar(ctx, mg.g, delta)?;
        let hom = FgAbGroup::from_orders(&vec![int(mg.two_g_minus_2()); ctx.s()]);
        let unresolved = !gb.is_trivial() && !coker_ev.is_trivial();
        (Some(gb), Some(hom), unresolved)
    } else {
        (None, None, false)
    };
    Ok(CokerOmega { coker, coker_ev, gamma_bar_piece, hom_piece, extension_unresolved })
}

/// Cokernel of the rigidified-image map (n = 0), computed as the image of
/// the boundary map b -> (x -> [b(d ⊗ x) + (1-g) b(x ⊗ x)]) on NS(rig).
pub fn coker_gamma_bar(ctx: &Context, g: usize, delta: &Pi1Element) -> Result<FgAbGroup> {
    if g == 0 {
        return Err(Error::GenusOutOfRange("the boundary image needs genus >= 1".into()));
    }
    let s = ctx.s();
    if s == 0 {
        return Ok(FgAbGroup::trivial());
    }
    let mg = MarkedGenus::new(g, 0);
    let columns = ns_rig_basis(ctx, delta)?;
    // The boundary sends b to the negative of the bracket row; the image
    // subgroup is the same either way.
    let beta = boundary_matrix(ctx, &mg, delta, &columns);
    let m = mg.two_g_minus_2();
    let big = Lattice::standard(s);
    let small = if m == 0 {
        Lattice::zero(s)
    } else {
        big.scaled(&rat_of(&int(m)))
    };
    let q = LatticeQuotient::new(big, &small)?;
    let elements: Vec<Vec<Rat>> = (0..beta.cols())
        .map(|j| beta.col(j).iter().map(rat_of).collect())
        .collect();
    let (image, _) = q.subgroup_cokernel(&small, &elements)?;
    Ok(image)
}

/// The two graded pieces of the cokernel of restriction onto the fixed-curve
/// Neron-Severi group, with the total order; the extension is not resolved.
#[derive(Clone, Debug)]
pub struct CokerResBar {
    pub ab_piece: FgAbGroup,
    pub r_g_piece: FgAbGroup,
    pub total_order: Option<Int>,
    pub extension_unresolved: bool,
}

pub fn coker_res_bar(ctx: &Context, mg: &MarkedGenus, _delta: &Pi1Element) -> Result<CokerResBar> {
    if mg.g == 0 {
        return Err(Error::GenusOutOfRange("restriction cokernel needs genus >= 1".into()));
    }
    let ab_piece = if mg.n > 0 {
        FgAbGroup::trivial()
    } else {
        FgAbGroup::from_orders(&vec![int(mg.two_g_minus_2()); ctx.s()])
    };
    let r_g_piece = crate::invforms::coker_r_g(&ctx.forms)?;
    let total_order = match (ab_piece.order(), r_g_piece.order()) {
        (Some(a), Some(b)) => Some(a * b),
        _ => None,
    };
    let extension_unresolved = !ab_piece.is_trivial() && !r_g_piece.is_trivial();
    Ok(CokerResBar { ab_piece, r_g_piece, total_order, extension_unresolved })
}

/// Genus-zero presentation (needs marked points): rank of the relative
/// Picard group and the weight cokernel.
#[derive(Clone, Debug)]
pub struct Genus0Report {
    pub rank: usize,
    pub coker_omega: FgAbGroup,
    /// Multipliers of the constrained basic-form lattice.
    pub constrained: FormLattice,
}

pub fn genus0_report(ctx: &Context, n: usize, delta: &Pi1Element) -> Result<Genus0Report> {
    if n == 0 {
        return Err(Error::NeedsMarkedPoint);
    }
    let k = ctx.k();
    let d_ss = ctx.datum.ss_part(&delta.lift);
    // {b in sc-even : b(d^ss ⊗ -) integral on the derived lattice}.
    let mut conds = Vec::new();
    for u in ctx.parts.lambda_d.basis_cols() {
        let mut row = Vec::with_capacity(k);
        for (f, fac) in ctx.datum.factors.iter().enumerate() {
            let off = ctx.datum.factor_offset(f);
            let bq = fac.basic_gram.to_q();
            let mut acc = Rat::zero();
            for a in 0..fac.rank {
                for b in 0..fac.rank {
                    acc += &d_ss[off + a] * &bq[(a, b)] * &u[off + b];
                }
            }
            row.push(acc);
        }
        conds.push(Congruence::integral(row));
    }
    let constrained_params =
        congruence_lattice(k, &conds).intersect(&ctx.forms.sc_even.params)?;
    let basis: Vec<WInvForm> = constrained_params
        .basis_cols()
        .iter()
        .map(|a| WInvForm::from_alpha(a.clone()))
        .collect();
    let mut functionals = Vec::new();
    for b in &basis {
        let phi = form_functional(&ctx.datum, &ctx.parts, b, &d_ss);
        if !ctx.parts.dual_d.contains(&phi) {
            return Err(Error::NonIntegralEvaluation);
        }
        functionals.push(phi);
    }
    let (_, coker) =
        ctx.parts.dcenter_chars.subgroup_cokernel(&ctx.parts.dual_ad, &functionals)?;
    let constrained = FormLattice {
        kind: crate::invforms::FormKind::ScEven,
        basis,
        params: constrained_params,
    };
    Ok(Genus0Report { rank: ctx.s() + k, coker_omega: coker, constrained })
}

/// Applicability report for identifying the divisor class group of the
/// semistable moduli space with the Picard group of the rigidification.
pub fn cl_report(
    ctx: &Context,
    mg: &MarkedGenus,
    delta: &Pi1Element,
    characteristic: u64,
) -> Result<ClReport> {
    let torus = ctx.datum.is_torus();
    let gn_ok = mg.g + mg.n >= 3;
    let condition = if torus {
        Some("torus")
    } else if characteristic > 0 && mg.g >= 4 {
        Some("positive characteristic, genus >= 4")
    } else if characteristic == 0 && mg.g >= 2 {
        Some("characteristic zero, genus >= 2")
    } else {
        None
    };
    let pgl2_caveat = !torus && characteristic == 0 && mg.g == 2;
    let applicable = gn_ok && condition.is_some();
    let moduli_space_known = torus || characteristic == 0 && (mg.n == 0 || mg.n > 2 * mg.g + 2);
    let rig_rank = if applicable && mg.g >= 1 {
        Some(rpic_rig_rank(ctx, mg, delta)?)
    } else {
        None
    };
    Ok(ClReport {
        applicable,
        condition: condition.map(|s| s.to_string()),
        genus_points_ok: gn_ok,
        pgl2_caveat,
        moduli_space_known,
        rig_rank,
    })
}

/// Convenient accessor for tests: quotient of invariant factors padded to
/// the (2g-2, ..., 2g-2, 1, ..., 1) presentation, largest factors first.
pub fn expected_unmarked_factors(two_g_minus_2: i64, s: usize, rank: usize) -> Vec<Int> {
    let mut v = vec![int(two_g_minus_2); s];
    v.extend(std::iter::repeat_n(Int::one(), rank - s));
    v
}
