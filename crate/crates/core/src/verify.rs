//! Engine-versus-oracle sweeps and structural property suites. The CLI's
//! table/verify commands and the acceptance tests all run through here.

use crate::error::{Error, Result};
use crate::exactalg::num::{int, rat, Int, Rat};
use crate::exactalg::FgAbGroup;
use crate::invforms::EvVariant;
use crate::oracle7::{self, oracle, BcIso, DIso, EGroup, FamilyParams, Quantity};
use crate::picard::{
    coker_gamma_bar, coker_omega, im_omega_gamma, ns_bun_rank, ns_rig_rank, rpic_report,
    Context, MarkedGenus, NsClass,
};
use crate::rootdata::{central_twist, parse_group_spec, pi1_torsion_elements, Pi1Element, TypeTag};
use num::{ToPrimitive, Zero};

/// One engine/oracle comparison.
#[derive(Clone, Debug)]
pub struct TableCell {
    pub quantity: String,
    pub engine: String,
    pub oracle: String,
}

impl TableCell {
    pub fn matches(&self) -> bool {
        self.engine == self.oracle
    }
}

#[derive(Clone, Debug)]
pub struct TableRow {
    pub label: String,
    pub cells: Vec<TableCell>,
}

impl TableRow {
    pub fn ok(&self) -> bool {
        self.cells.iter().all(|c| c.matches())
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        if self.ok() {
            format!("{}: {} cases, all passed", self.name, self.cases)
        } else {
            format!("{}: {} cases, {} FAILED", self.name, self.cases, self.failures.len())
        }
    }

    pub fn from_rows(name: &str, rows: &[TableRow]) -> SuiteReport {
        let mut failures = Vec::new();
        let mut cases = 0;
        for r in rows {
            for c in &r.cells {
                cases += 1;
                if !c.matches() {
                    failures.push(format!(
                        "{} [{}]: engine {} vs oracle {}",
                        r.label, c.quantity, c.engine, c.oracle
                    ));
                }
            }
        }
        SuiteReport { name: name.to_string(), cases, failures }
    }
}

/// Engine values of the five per-family quantities for a one-factor datum.
struct EngineQuantities {
    mult_sc_even: Rat,
    mult_even: Rat,
    coker_rg: FgAbGroup,
    coker_ev: FgAbGroup,
    coker_ev_tilde: FgAbGroup,
}

fn engine_quantities(ctx: &Context, delta: &Pi1Element) -> Result<EngineQuantities> {
    if ctx.k() != 1 {
        return Err(Error::InvalidParams("family sweeps need one simple factor".into()));
    }
    let mult = |fl: &crate::invforms::FormLattice| fl.basis[0].alpha[0].clone();
    let ev = ctx.ev(delta, EvVariant::Ev)?;
    let evt = ctx.ev(delta, EvVariant::EvTilde)?;
    if !oracle7::order_ratio_ok(&ev.cokernel, &evt.cokernel) {
        return Err(Error::InvalidParams("evaluation cokernel order ratio not in {1,2}".into()));
    }
    Ok(EngineQuantities {
        mult_sc_even: mult(&ctx.forms.pair_sc_even),
        mult_even: mult(&ctx.forms.pair_even),
        coker_rg: crate::invforms::coker_r_g(&ctx.forms)?,
        coker_ev: ev.cokernel,
        coker_ev_tilde: evt.cokernel,
    })
}

fn family_row(
    label: String,
    ctx: &Context,
    delta: &Pi1Element,
    params: &FamilyParams,
) -> Result<TableRow> {
    let eng = engine_quantities(ctx, delta)?;
    let cell = |q: &str, engine: String, want: OracleRendered| TableCell {
        quantity: q.to_string(),
        engine,
        oracle: want.0,
    };
    struct OracleRendered(String);
    let orc = |q: Quantity| -> Result<OracleRendered> {
        let v = oracle(params, q)?;
        Ok(OracleRendered(match v {
            oracle7::OracleValue::Multiplier(m) => m.to_string(),
            oracle7::OracleValue::Group(g) => g.to_string(),
        }))
    };
    let cells = vec![
        cell("sc-even multiplier", eng.mult_sc_even.to_string(), orc(Quantity::MultiplierScEven)?),
        cell("even multiplier", eng.mult_even.to_string(), orc(Quantity::MultiplierEven)?),
        cell("coker r_G", eng.coker_rg.to_string(), orc(Quantity::CokerRG)?),
        cell("coker ev", eng.coker_ev.to_string(), orc(Quantity::CokerEv)?),
        cell("coker ev~", eng.coker_ev_tilde.to_string(), orc(Quantity::CokerEvTilde)?),
    ];
    Ok(TableRow { label, cells })
}

/// Type-A sweep over all n <= nmax, r | s | n, and classes in Z/s.
pub fn sweep_type_a(nmax: usize) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for n in 2..=nmax {
        for s in crate::rootdata::build::divisors(n) {
            for r in crate::rootdata::build::divisors(s) {
                let spec = if r == s {
                    format!("SL:{}/mu:{}", n, r)
                } else {
                    format!("C[mu:{}](SL:{}/mu:{})", s / r, n, r)
                };
                let ast = parse_group_spec(&spec)?;
                let ctx = Context::new(ast.build()?)?;
                for delta in 0..s {
                    let lift = ast.delta_lift(delta as i64)?;
                    let d = ctx.pi1_class(&lift)?;
                    let params = FamilyParams::A {
                        n: n as i64,
                        r: r as i64,
                        s: s as i64,
                        delta: delta as i64,
                    };
                    rows.push(family_row(
                        format!("A n={} r={} s={} class={}", n, r, s, delta),
                        &ctx,
                        &d,
                        &params,
                    )?);
                }
            }
        }
    }
    Ok(rows)
}

/// B/C sweep over the six set-ups for 2 <= l <= lmax.
pub fn sweep_bc(lmax: usize) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for l in 2..=lmax {
        let mut cases: Vec<(String, BcIso, BcIso)> = vec![
            (format!("Spin:{}", 2 * l + 1), BcIso::SpinOdd, BcIso::SpinOdd),
            (format!("SO:{}", 2 * l + 1), BcIso::SoOdd, BcIso::SoOdd),
            (format!("Sp:{}", 2 * l), BcIso::Sp, BcIso::Sp),
            (format!("PSp:{}", 2 * l), BcIso::PSp, BcIso::PSp),
        ];
        cases.push((format!("C[mu:2](Spin:{})", 2 * l + 1), BcIso::SpinOdd, BcIso::SoOdd));
        cases.push((format!("C[mu:2](Sp:{})", 2 * l), BcIso::Sp, BcIso::PSp));
        for (spec, d_tag, ss_tag) in cases {
            let ast = parse_group_spec(&spec)?;
            let ctx = Context::new(ast.build()?)?;
            let deltas = enumerate_deltas(&ctx, &ast, 4)?;
            for (dl, delta) in deltas {
                let params = FamilyParams::Bc {
                    l: l as i64,
                    d: d_tag,
                    ss: ss_tag,
                    delta_ss_zero: delta.ss_is_zero(),
                };
                rows.push(family_row(
                    format!("{} l={} class={}", spec, l, dl),
                    &ctx,
                    &delta,
                    &params,
                )?);
            }
        }
    }
    Ok(rows)
}

/// D sweep over Spin/SO/PSO (and the half-spin quotients at even rank) with
/// every component class, plus the central twists that separate the
/// derived subgroup from the semisimplification.
pub fn sweep_d(lmax: usize) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for l in 3..=lmax {
        let mut cases: Vec<(String, Context, DIso, DIso)> = Vec::new();
        let named = |s: &str| -> Result<Context> { Context::from_spec(s) };
        cases.push((format!("Spin:{}", 2 * l), named(&format!("Spin:{}", 2 * l))?, DIso::Spin, DIso::Spin));
        cases.push((format!("SO:{}", 2 * l), named(&format!("SO:{}", 2 * l))?, DIso::So, DIso::So));
        cases.push((format!("PSO:{}", 2 * l), named(&format!("PSO:{}", 2 * l))?, DIso::PSo, DIso::PSo));
        if l % 2 == 0 {
            cases.push((
                format!("Omega+:{}", 2 * l),
                named(&format!("Omega+:{}", 2 * l))?,
                DIso::OmegaPlus,
                DIso::OmegaPlus,
            ));
            cases.push((
                format!("Omega-:{}", 2 * l),
                named(&format!("Omega-:{}", 2 * l))?,
                DIso::OmegaMinus,
                DIso::OmegaMinus,
            ));
        }
        // Twists by explicit central classes.
        let spin = crate::rootdata::build_named(&format!("Spin:{}", 2 * l))?;
        let w = |i: usize| spin.factors[0].coweight(i);
        let twisted = |h: &crate::rootdata::ReductiveDatum, xi: &[Rat]| -> Result<Context> {
            Context::new(central_twist(h, xi)?)
        };
        cases.push((
            format!("C[e1](Spin:{})", 2 * l),
            twisted(&spin, &w(1))?,
            DIso::Spin,
            DIso::So,
        ));
        if l % 2 == 0 {
            cases.push((
                format!("C[wl](Spin:{})", 2 * l),
                twisted(&spin, &w(l))?,
                DIso::Spin,
                DIso::OmegaPlus,
            ));
        } else {
            cases.push((
                format!("C[wl](Spin:{})", 2 * l),
                twisted(&spin, &w(l))?,
                DIso::Spin,
                DIso::PSo,
            ));
        }
        let so = crate::rootdata::build_named(&format!("SO:{}", 2 * l))?;
        cases.push((format!("C[mu2](SO:{})", 2 * l), twisted(&so, &w(l))?, DIso::So, DIso::PSo));
        if l % 2 == 0 {
            let om = crate::rootdata::build_named(&format!("Omega+:{}", 2 * l))?;
            cases.push((
                format!("C[mu2](Omega+:{})", 2 * l),
                twisted(&om, &w(1))?,
                DIso::OmegaPlus,
                DIso::PSo,
            ));
        }
        for (spec, ctx, d_tag, ss_tag) in cases {
            let deltas = enumerate_all_deltas(&ctx, 4)?;
            for (dl, delta) in deltas {
                let ord = ctx.parts.pi1_ss.class_order(&ctx.datum.ss_part(&delta.lift))?;
                let params = FamilyParams::D {
                    l: l as i64,
                    d: d_tag,
                    ss: ss_tag,
                    delta_ord: ord.to_i64().unwrap_or(0),
                };
                rows.push(family_row(
                    format!("{} l={} class={}", spec, l, dl),
                    &ctx,
                    &delta,
                    &params,
                )?);
            }
        }
    }
    Ok(rows)
}

/// Exceptional sweep: all set-ups of the E/F/G families with every class.
pub fn sweep_exceptional() -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    let e_cases: Vec<(&str, EGroup, EGroup)> = vec![
        ("E8", EGroup::E8, EGroup::E8),
        ("E7sc", EGroup::E7Sc, EGroup::E7Sc),
        ("E7ad", EGroup::E7Ad, EGroup::E7Ad),
        ("C[mu:2](E7sc)", EGroup::E7Sc, EGroup::E7Ad),
        ("E6sc", EGroup::E6Sc, EGroup::E6Sc),
        ("E6ad", EGroup::E6Ad, EGroup::E6Ad),
        ("C[mu:3](E6sc)", EGroup::E6Sc, EGroup::E6Ad),
    ];
    for (spec, d_tag, ss_tag) in e_cases {
        let ast = parse_group_spec(spec)?;
        let ctx = Context::new(ast.build()?)?;
        for (dl, delta) in enumerate_deltas(&ctx, &ast, 6)? {
            let params =
                FamilyParams::E { d: d_tag, ss: ss_tag, delta_ss_zero: delta.ss_is_zero() };
            rows.push(family_row(format!("{} class={}", spec, dl), &ctx, &delta, &params)?);
        }
    }
    for (spec, tag) in [("F4", TypeTag::F4), ("G2", TypeTag::G2)] {
        let ctx = Context::from_spec(spec)?;
        let delta = ctx.pi1_zero();
        let params = FamilyParams::Fg { tag };
        rows.push(family_row(format!("{} class=0", spec), &ctx, &delta, &params)?);
    }
    Ok(rows)
}

/// Component classes for a sweep: every torsion class for finite pi_1, and
/// shorthand multiples 0..free_range of the canonical generator otherwise.
fn enumerate_deltas(
    ctx: &Context,
    ast: &crate::rootdata::GroupSpec,
    free_range: i64,
) -> Result<Vec<(String, Pi1Element)>> {
    if ctx.parts.pi1.group().is_finite() {
        Ok(pi1_torsion_elements(&ctx.datum, &ctx.parts)
            .into_iter()
            .enumerate()
            .map(|(i, e)| (format!("t{}", i), e))
            .collect())
    } else {
        let mut out = Vec::new();
        for k in 0..free_range {
            let lift = ast.delta_lift(k)?;
            out.push((format!("{}", k), ctx.pi1_class(&lift)?));
        }
        Ok(out)
    }
}

/// As above but using the cocharacter basis for data built without a spec:
/// free classes are sampled as multiples of the last basis vector.
fn enumerate_all_deltas(ctx: &Context, free_range: i64) -> Result<Vec<(String, Pi1Element)>> {
    let torsion = pi1_torsion_elements(&ctx.datum, &ctx.parts);
    if ctx.parts.pi1.group().is_finite() {
        return Ok(torsion.into_iter().enumerate().map(|(i, e)| (format!("t{}", i), e)).collect());
    }
    let gen = ctx
        .datum
        .cochar
        .basis_cols()
        .into_iter()
        .last()
        .expect("nonzero rank");
    let mut out = Vec::new();
    for k in 0..free_range {
        for (i, t) in torsion.iter().enumerate() {
            let lift: Vec<Rat> =
                gen.iter().zip(&t.lift).map(|(g, tl)| g * rat(k) + tl).collect();
            out.push((format!("{}+t{}", k, i), ctx.pi1_class(&lift)?));
        }
    }
    Ok(out)
}

/// Torus closed-form rows: engine weight/boundary cokernels against the
/// gcd formulas.
pub fn sweep_tori(dim: usize, g: usize, lifts: &[Vec<i64>]) -> Result<Vec<TableRow>> {
    let ctx = Context::from_spec(&format!("torus:{}", dim))?;
    let mg = MarkedGenus::new(g, 0);
    let mut rows = Vec::new();
    for lift in lifts {
        assert_eq!(lift.len(), dim);
        let lr: Vec<Rat> = lift.iter().map(|&x| rat(x)).collect();
        let delta = ctx.pi1_class(&lr)?;
        let div = delta.div_ab.to_i64().unwrap_or(0);
        let params = FamilyParams::Torus { dim: dim as i64, div, g: g as i64 };
        let omega = coker_omega(&ctx, &mg, &delta)?;
        let gamma = coker_gamma_bar(&ctx, g, &delta)?;
        let cells = vec![
            TableCell {
                quantity: "coker omega".into(),
                engine: omega.coker.to_string(),
                oracle: oracle(&params, Quantity::TorusCokerOmega)?
                    .group()
                    .unwrap()
                    .to_string(),
            },
            TableCell {
                quantity: "coker gamma-bar".into(),
                engine: gamma.to_string(),
                oracle: oracle(&params, Quantity::TorusCokerGammaBar)?
                    .group()
                    .unwrap()
                    .to_string(),
            },
        ];
        rows.push(TableRow { label: format!("torus:{} g={} d={:?}", dim, g, lift), cells });
    }
    Ok(rows)
}

/// Deterministic grid of lift vectors with entries in [-20, 20].
pub fn torus_lift_grid(dim: usize) -> Vec<Vec<i64>> {
    match dim {
        1 => (-20..=20).map(|x| vec![x]).collect(),
        2 => {
            let mut out = Vec::new();
            for a in -20i64..=20 {
                for b in -20i64..=20 {
                    out.push(vec![a, b]);
                }
            }
            out
        }
        3 => {
            let vals: Vec<i64> = vec![-20, -6, -2, -1, 0, 1, 2, 3, 20];
            let mut out = Vec::new();
            for &a in &vals {
                for &b in &vals {
                    for &c in &vals {
                        out.push(vec![a, b, c]);
                    }
                }
            }
            out
        }
        _ => vec![vec![0; dim]],
    }
}

/// The torus closed-form suite at full sweep size.
pub fn torus_suite() -> Result<SuiteReport> {
    let mut rows = Vec::new();
    for dim in 1..=3 {
        let grid = torus_lift_grid(dim);
        for g in 1..=6 {
            rows.extend(sweep_tori(dim, g, &grid)?);
        }
    }
    Ok(SuiteReport::from_rows("torus-closed-forms", &rows))
}

/// The twenty mixed data (tori x simple factors) used by the invariant
/// factor, order-identity and rank sweeps. Lifts are integer combinations
/// of the cocharacter basis.
pub fn mixed_data() -> Result<Vec<(String, Context, Pi1Element)>> {
    let entries: Vec<(&str, Vec<i64>)> = vec![
        ("torus:1", vec![3]),
        ("torus:2", vec![1, 0]),
        ("torus:3", vec![2, 4, 6]),
        ("GL:2", vec![1, 1]),
        ("GL:3", vec![0, 0, 0]),
        ("GL:4", vec![0, 1, 0, 2]),
        ("SL:2 x torus:1", vec![0, 5]),
        ("SL:4/mu:2 x torus:1", vec![1, 0, 1, 2]),
        ("PGL:3 x torus:1", vec![1, 0, 1]),
        ("Sp:4 x torus:1", vec![1, 0, 3]),
        ("Spin:7 x torus:1", vec![0, 1, 0, 0]),
        ("SO:8 x torus:2", vec![1, 0, 0, 1, 2, 0]),
        ("PSO:8 x torus:1", vec![0, 0, 1, 1, 4]),
        ("E6sc x torus:1", vec![0, 0, 0, 0, 0, 0, 1]),
        ("F4 x torus:1", vec![1, 0, 0, 1, 0]),
        ("G2 x torus:2", vec![1, 1, 2, 0]),
        ("C[mu:2](Sp:4)", vec![0, 1, 3]),
        ("C[mu:2](SL:4/mu:2)", vec![1, 0, 0, 1]),
        ("C[mu:3](E6sc)", vec![0, 1, 0, 0, 0, 0, 2]),
        ("GL:2 x SL:2", vec![1, 1, 1]),
    ];
    let mut out = Vec::new();
    for (spec, coeffs) in entries {
        let ctx = Context::from_spec(spec)?;
        let cq: Vec<Rat> = coeffs.iter().map(|&x| rat(x)).collect();
        let lift = ctx.datum.cochar.basis().mul_vec(&cq);
        let delta = ctx.pi1_class(&lift)?;
        out.push((spec.to_string(), ctx, delta));
    }
    Ok(out)
}

/// Invariant factors of the unmarked Picard image: (2g-2) repeated dim G^ab
/// times, then units.
pub fn suite_im_factors() -> Result<SuiteReport> {
    let mut report = SuiteReport { name: "im-factors".into(), cases: 0, failures: Vec::new() };
    for (label, ctx, delta) in mixed_data()? {
        for g in [2usize, 3, 5] {
            report.cases += 1;
            let mg = MarkedGenus::new(g, 0);
            let im = im_omega_gamma(&ctx, &mg, &delta, false)?;
            let expect = crate::picard::expected_unmarked_factors(
                mg.two_g_minus_2(),
                ctx.s(),
                im.ns_rank,
            );
            if im.inclusion_factors != expect {
                report.failures.push(format!(
                    "{} g={}: factors {:?} != {:?}",
                    label, g, im.inclusion_factors, expect
                ));
            }
        }
    }
    Ok(report)
}

/// Order identity at n = 0 and the marked-case isomorphism with the
/// evaluation cokernel.
pub fn suite_order_identities() -> Result<SuiteReport> {
    let mut report =
        SuiteReport { name: "order-identities".into(), cases: 0, failures: Vec::new() };
    for (label, ctx, delta) in mixed_data()? {
        for g in [2usize, 3, 5] {
            report.cases += 1;
            let mg = MarkedGenus::new(g, 0);
            let om = coker_omega(&ctx, &mg, &delta)?;
            let gb = coker_gamma_bar(&ctx, g, &delta)?;
            let (Some(a), Some(b), Some(c)) =
                (om.coker.order(), gb.order(), om.coker_ev.order())
            else {
                report.failures.push(format!("{} g={}: unexpected infinite order", label, g));
                continue;
            };
            let lhs = a * b;
            let rhs = int(mg.two_g_minus_2()).pow(ctx.s() as u32) * c;
            if lhs != rhs {
                report
                    .failures
                    .push(format!("{} g={}: |coker| identity {} != {}", label, g, lhs, rhs));
            }
        }
        for n in [1usize, 2] {
            report.cases += 1;
            let mg = MarkedGenus::new(2, n);
            let om = coker_omega(&ctx, &mg, &delta)?;
            if om.coker != om.coker_ev {
                report.failures.push(format!(
                    "{} n={}: coker(omega) {} != coker(ev) {}",
                    label, n, om.coker, om.coker_ev
                ));
            }
        }
    }
    Ok(report)
}

/// Rank bookkeeping across the mixed data.
pub fn suite_rank_bookkeeping() -> Result<SuiteReport> {
    let mut report =
        SuiteReport { name: "rank-bookkeeping".into(), cases: 0, failures: Vec::new() };
    for (label, ctx, delta) in mixed_data()? {
        let s = ctx.s();
        let k = ctx.k();
        for (g, n) in [(1usize, 0usize), (2, 0), (2, 1), (3, 2)] {
            report.cases += 1;
            let mg = MarkedGenus::new(g, n);
            let rp = rpic_report(&ctx, &mg, &delta)?;
            let expect = s * mg.h_hat_rank()? + s * (s + 1) / 2 + k;
            if rp.free_rank != expect {
                report.failures.push(format!(
                    "{} (g,n)=({},{}): rank {} != {}",
                    label, g, n, rp.free_rank, expect
                ));
            }
        }
        report.cases += 1;
        let diff = ns_bun_rank(&ctx) - ns_rig_rank(&ctx, &delta)?;
        if diff != s {
            report
                .failures
                .push(format!("{}: NS rank difference {} != {}", label, diff, s));
        }
        // At genus >= 2 the rigidification loses exactly s free directions.
        report.cases += 1;
        let mg = MarkedGenus::new(2, 1);
        let whole = rpic_report(&ctx, &mg, &delta)?.free_rank;
        let rig = crate::picard::rpic_rig_rank(&ctx, &mg, &delta)?;
        if whole - rig != s {
            report.failures.push(format!(
                "{}: Picard rank difference {} != {}",
                label,
                whole - rig,
                s
            ));
        }
    }
    Ok(report)
}

/// Brute-force Weyl certificates at rank <= 3.
pub fn suite_weyl_bruteforce() -> Result<SuiteReport> {
    let mut report =
        SuiteReport { name: "weyl-bruteforce".into(), cases: 0, failures: Vec::new() };
    for tag in [
        TypeTag::A(1),
        TypeTag::A(2),
        TypeTag::B(2),
        TypeTag::C(2),
        TypeTag::G2,
        TypeTag::A(3),
        TypeTag::B(3),
        TypeTag::C(3),
    ] {
        report.cases += 1;
        let brute = oracle7::bruteforce_invariant_forms(tag)?;
        let frozen = crate::rootdata::simple_factor_table(tag)?.basic_gram;
        if brute != frozen {
            report.failures.push(format!("{}: brute-force Gram differs from table", tag));
        }
    }
    Ok(report)
}

/// GL_n sanity: the evaluation obstruction is Z/gcd(n, d).
pub fn suite_gl_sanity() -> Result<SuiteReport> {
    let mut report = SuiteReport { name: "gl-sanity".into(), cases: 0, failures: Vec::new() };
    for n in 2..=8usize {
        let spec = format!("GL:{}", n);
        let ast = parse_group_spec(&spec)?;
        let ctx = Context::new(ast.build()?)?;
        for d in -8..=8i64 {
            report.cases += 1;
            let lift = ast.delta_lift(d)?;
            let delta = ctx.pi1_class(&lift)?;
            let evt = ctx.ev(&delta, EvVariant::EvTilde)?;
            let want = FgAbGroup::from_orders(&[int(crate::exactalg::num::gcd_i64(
                n as i64, d,
            ))]);
            if evt.cokernel != want {
                report.failures.push(format!(
                    "GL:{} d={}: {} != {}",
                    n, d, evt.cokernel, want
                ));
            }
        }
    }
    Ok(report)
}

/// Functoriality: pull-back composition along two chains on seeded random
/// classes, and lift independence of the evaluation homomorphism.
pub fn suite_functoriality(classes: usize, trials: usize) -> Result<SuiteReport> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x1a77);
    let mut report =
        SuiteReport { name: "functoriality".into(), cases: 0, failures: Vec::new() };

    // Chain 1: torus -> SL2 -> GL2. Chain 2: torus:2 -> Sp4.
    let t1 = Context::from_spec("torus:1")?;
    let sl2 = Context::from_spec("SL:2")?;
    let gl2 = Context::from_spec("GL:2")?;
    let psi = crate::exactalg::MatQ::from_rows(&[vec![rat(1)]]);
    let phi = crate::exactalg::MatQ::from_rows(&[vec![rat(1)], vec![rat(0)]]);
    let comp = phi.mul(&psi);
    let t2 = Context::from_spec("torus:2")?;
    let sp4 = Context::from_spec("Sp:4")?;
    let incl2 = crate::exactalg::MatQ::identity(2);

    let random_class = |ctx: &Context,
                            delta: &Pi1Element,
                            rng: &mut rand_chacha::ChaCha8Rng|
     -> Result<NsClass> {
        let p = ctx.forms.d_even.rank();
        let coeffs: Vec<Int> = (0..p).map(|_| int(rng.gen_range(-3..=3))).collect();
        let form = ctx.forms.d_even.combination(&ctx.datum, &ctx.parts, &coeffs);
        let mut chi =
            crate::invforms::form_functional(&ctx.datum, &ctx.parts, &form, &delta.lift);
        for i in 0..ctx.s() {
            let c = rat(rng.gen_range(-3..=3));
            for (a, b) in chi.iter_mut().zip(&ctx.parts.ab_char(i)) {
                *a += &c * b;
            }
        }
        // Shift by a random adjoint character.
        if ctx.parts.dual_ad.rank() > 0 {
            let cols = ctx.parts.dual_ad.basis_cols();
            let j = rng.gen_range(0..cols.len());
            let c = rat(rng.gen_range(-2..=2));
            for (a, b) in chi.iter_mut().zip(&cols[j]) {
                *a += &c * b;
            }
        }
        Ok(NsClass { chi, form })
    };

    for case in 0..classes {
        report.cases += 1;
        let (src, mid, tgt, f, g, fg) = if case % 2 == 0 {
            (&t1, Some(&sl2), &gl2, &psi, &phi, &comp)
        } else {
            (&t2, None, &sp4, &incl2, &incl2, &incl2)
        };
        let e_lift: Vec<Rat> =
            (0..src.parts.ambient).map(|_| rat(rng.gen_range(-3..=3))).collect();
        let e = src.pi1_class(&e_lift)?;
        let d = tgt.pi1_class(&fg.mul_vec(&e.lift))?;
        let cls = random_class(tgt, &d, &mut rng)?;
        if !crate::picard::ns_membership(tgt, &d, &cls, false)? {
            report.failures.push(format!("case {}: random class not in NS", case));
            continue;
        }
        let one = crate::picard::ns_pullback(fg, tgt, src, &e, &cls)?;
        let two = match mid {
            Some(m) => {
                let e_mid = m.pi1_class(&f.mul_vec(&e.lift))?;
                let half = crate::picard::ns_pullback(g, tgt, m, &e_mid, &cls)?;
                crate::picard::ns_pullback(f, m, src, &e, &half)?
            }
            None => crate::picard::ns_pullback(fg, tgt, src, &e, &cls)?,
        };
        let chi_diff: Vec<Rat> =
            one.chi.iter().zip(&two.chi).map(|(a, b)| a - b).collect();
        let classes_equal = one.form == two.form
            && (chi_diff.iter().all(|x| x.is_zero())
                || src.parts.dual_ad.contains(&chi_diff));
        if !classes_equal {
            report.failures.push(format!("case {}: composition mismatch", case));
        }
        if !crate::picard::ns_membership(src, &e, &one, false)? {
            report.failures.push(format!("case {}: pullback left NS", case));
        }
    }

    // Lift independence of the evaluation homomorphisms.
    let pool = ["GL:3", "C[mu:2](SL:4/mu:2)", "SO:10", "C[mu:2](Sp:6)", "PGL:4"];
    let ctxs: Vec<Context> =
        pool.iter().map(|s| Context::from_spec(s)).collect::<Result<_>>()?;
    for trial in 0..trials {
        report.cases += 1;
        let ctx = &ctxs[trial % ctxs.len()];
        let r = ctx.datum.cochar.rank();
        let coeffs: Vec<Rat> = (0..r).map(|_| rat(rng.gen_range(-4..=4))).collect();
        let lift = ctx.datum.cochar.basis().mul_vec(&coeffs);
        let d1 = ctx.pi1_class(&lift)?;
        let mut lift2 = lift.clone();
        for x in lift2.iter_mut().take(ctx.parts.ss_dim) {
            *x += rat(rng.gen_range(-5..=5));
        }
        let d2 = ctx.pi1_class(&lift2)?;
        for variant in [EvVariant::Ev, EvVariant::EvTilde] {
            let a = ctx.ev(&d1, variant)?;
            let b = ctx.ev(&d2, variant)?;
            if a.images != b.images || a.cokernel != b.cokernel {
                report
                    .failures
                    .push(format!("trial {} ({:?}): lift dependence", trial, variant));
            }
        }
    }
    Ok(report)
}

/// All suites in acceptance order.
pub fn all_suites() -> Result<Vec<SuiteReport>> {
    Ok(vec![
        SuiteReport::from_rows("type-a-sweep", &sweep_type_a(12)?),
        SuiteReport::from_rows("bc-sweep", &sweep_bc(8)?),
        SuiteReport::from_rows("d-sweep", &sweep_d(10)?),
        SuiteReport::from_rows("exceptional-sweep", &sweep_exceptional()?),
        torus_suite()?,
        suite_im_factors()?,
        suite_order_identities()?,
        suite_rank_bookkeeping()?,
        suite_weyl_bruteforce()?,
        suite_functoriality(50, 100)?,
        suite_gl_sanity()?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_type_a_sweep_matches() {
        let rows = sweep_type_a(6).unwrap();
        for r in &rows {
            assert!(r.ok(), "{:?}", r);
        }
    }

    #[test]
    fn small_bc_sweep_matches() {
        let rows = sweep_bc(3).unwrap();
        for r in &rows {
            assert!(r.ok(), "{:?}", r);
        }
    }

    #[test]
    fn small_d_sweep_matches() {
        let rows = sweep_d(4).unwrap();
        for r in &rows {
            assert!(r.ok(), "{:?}", r);
        }
    }

    #[test]
    fn exceptional_sweep_matches() {
        let rows = sweep_exceptional().unwrap();
        for r in &rows {
            assert!(r.ok(), "{:?}", r);
        }
    }

    #[test]
    fn small_torus_rows_match() {
        for g in 1..=3 {
            let rows = sweep_tori(2, g, &[vec![0, 0], vec![1, 0], vec![2, 4]]).unwrap();
            for r in &rows {
                assert!(r.ok(), "{:?}", r);
            }
        }
    }
}
