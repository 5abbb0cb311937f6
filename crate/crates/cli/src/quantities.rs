//! The compute subcommand: resolve the datum and class, dispatch on the
//! requested quantity, and emit a report envelope.

use crate::envelope::{group_value, int_value, rat_value, vec_value, Envelope};
use crate::ComputeArgs;
use piclat_core::error::{Error, Result};
use piclat_core::exactalg::num::Rat;
use piclat_core::invforms::{self, EvVariant, FormKind};
use piclat_core::picard::{self, Context, MarkedGenus};
use piclat_core::rootdata::{parse_group_spec, Pi1Element};
use serde_json::{json, Map, Value};
use std::process::ExitCode;

pub fn run_compute(args: &ComputeArgs) -> Result<ExitCode> {
    let (ctx, input_echo, delta) = resolve_input(args)?;
    let mg = MarkedGenus::new(args.g, args.n);
    let envelope = dispatch(args, &ctx, &mg, &delta, input_echo)?;
    crate::emit(&envelope.render(&args.format));
    Ok(ExitCode::SUCCESS)
}

fn resolve_input(args: &ComputeArgs) -> Result<(Context, Map<String, Value>, Pi1Element)> {
    let mut echo = Map::new();
    echo.insert("g".into(), json!(args.g));
    echo.insert("n".into(), json!(args.n));
    let ctx = if let Some(path) = &args.datum_file {
        echo.insert("datum_file".into(), json!(path.display().to_string()));
        Context::new(crate::datum_file::load(path)?)?
    } else if let Some(spec) = &args.group {
        let ast = parse_group_spec(spec)?;
        echo.insert("group".into(), json!(ast.to_string()));
        Context::new(ast.build()?)?
    } else {
        return Err(Error::Parse("one of --group or --datum-file is required".into()));
    };
    let lift: Vec<Rat> = if let Some(v) = &args.delta_vec {
        crate::datum_file::parse_vec(v)?
    } else if let Some(k) = args.delta {
        match &args.group {
            Some(spec) => parse_group_spec(spec)?.delta_lift(k)?,
            None => {
                return Err(Error::Parse(
                    "integer class shorthand needs --group; use --delta-vec".into(),
                ))
            }
        }
    } else {
        vec![Rat::from_integer(0.into()); ctx.parts.ambient]
    };
    if lift.len() != ctx.parts.ambient {
        return Err(Error::Parse(format!(
            "class lift has {} entries, ambient dimension is {}",
            lift.len(),
            ctx.parts.ambient
        )));
    }
    let delta = ctx.pi1_class(&lift)?;
    echo.insert("delta_lift".into(), vec_value(&delta.lift));
    Ok((ctx, echo, delta))
}

fn dispatch(
    args: &ComputeArgs,
    ctx: &Context,
    mg: &MarkedGenus,
    delta: &Pi1Element,
    input: Map<String, Value>,
) -> Result<Envelope> {
    let mut tags: Vec<String> = Vec::new();
    let mut assumptions: Vec<String> = Vec::new();
    let result: Value = match args.quantity.as_str() {
        "pi1" => {
            tags.push("cocharacters-mod-coroots".into());
            group_value(ctx.parts.pi1.group())
        }
        "center-chars" => {
            tags.push("characters-mod-adjoint-characters".into());
            group_value(ctx.parts.center_chars.group())
        }
        "dcenter-chars" => {
            tags.push("derived-characters-mod-adjoint-characters".into());
            group_value(ctx.parts.dcenter_chars.group())
        }
        "form-lattice" => {
            let kind = parse_kind(&args.kind)?;
            tags.push(format!("invariant-form-lattice:{}", kind.name()));
            let fl = match kind {
                FormKind::Full => &ctx.forms.full,
                FormKind::FullEven => &ctx.forms.full_even,
                FormKind::DEven => &ctx.forms.d_even,
                FormKind::PairEven => &ctx.forms.pair_even,
                FormKind::PairScEven => &ctx.forms.pair_sc_even,
                FormKind::ScEven => &ctx.forms.sc_even,
            };
            let basis: Vec<Value> = fl
                .basis
                .iter()
                .map(|b| {
                    json!({
                        "multipliers": b.alpha.iter().map(rat_value).collect::<Vec<_>>(),
                        "ab_block": (0..b.ab_gram.rows())
                            .map(|i| (0..b.ab_gram.cols()).map(|j| rat_value(&b.ab_gram[(i, j)])).collect::<Vec<_>>())
                            .collect::<Vec<_>>(),
                    })
                })
                .collect();
            json!({"rank": fl.rank(), "basis": basis})
        }
        "coker-rg" => {
            tags.push("pair-even-index-in-sc-even".into());
            group_value(&invforms::coker_r_g(&ctx.forms)?)
        }
        "coker-ev" | "coker-ev-tilde" => {
            let variant = if args.quantity == "coker-ev" {
                tags.push("evaluation-cokernel".into());
                EvVariant::Ev
            } else {
                tags.push("extended-evaluation-cokernel".into());
                EvVariant::EvTilde
            };
            let ev = ctx.ev(delta, variant)?;
            let images: Vec<Value> = ev
                .images
                .iter()
                .map(|c| Value::Array(c.iter().map(int_value).collect()))
                .collect();
            json!({
                "cokernel": group_value(&ev.cokernel),
                "image_subgroup": group_value(&ev.image_subgroup),
                "basis_image_classes": images,
            })
        }
        "coker-omega" => {
            mg.h_hat_rank()?; // genus >= 1 gate
            let out = picard::coker_omega(ctx, mg, delta)?;
            tags.push("weight-cokernel-from-image-generators".into());
            if mg.n > 0 {
                tags.push("marked-case-evaluation-isomorphism".into());
            } else {
                tags.push("unmarked-weight-sequence".into());
            }
            let mut m = Map::new();
            m.insert("cokernel".into(), group_value(&out.coker));
            m.insert("coker_ev".into(), group_value(&out.coker_ev));
            if let Some(gb) = &out.gamma_bar_piece {
                m.insert("boundary_image_piece".into(), group_value(gb));
            }
            if let Some(h) = &out.hom_piece {
                m.insert("hom_piece".into(), group_value(h));
            }
            if out.extension_unresolved {
                m.insert("extension_resolved".into(), json!(false));
            }
            Value::Object(m)
        }
        "coker-gamma-bar" => {
            tags.push("rigidified-image-boundary".into());
            group_value(&picard::coker_gamma_bar(ctx, args.g, delta)?)
        }
        "im-omega-gamma" => {
            let im = picard::im_omega_gamma(ctx, mg, delta, args.rigidified)?;
            tags.push(if args.rigidified {
                "rigidified-image-divisibility".into()
            } else {
                "unmarked-image-divisibility".into()
            });
            json!({
                "ns_rank": im.ns_rank,
                "inclusion_factors": im.inclusion_factors.iter().map(int_value).collect::<Vec<_>>(),
                "quotient": group_value(&im.quotient),
            })
        }
        "rpic-report" => {
            let r = picard::rpic_report(ctx, mg, delta)?;
            tags.push("tautological-kernel-sequence".into());
            tags.push("form-quotient-sequence".into());
            json!({
                "free_rank": r.free_rank,
                "kernel_rank": r.kernel_rank,
                "form_quotient_rank": r.dev_rank,
                "ab_subgroup_rank": r.ab_subgroup_rank,
                "pair_quotient_rank": r.pair_rank,
                "rigidified_free_rank": picard::rpic_rig_rank(ctx, mg, delta)?,
            })
        }
        "ns-ranks" => {
            tags.push("neron-severi-filtration".into());
            json!({
                "stack": picard::ns_bun_rank(ctx),
                "rigidification": picard::ns_rig_rank(ctx, delta)?,
            })
        }
        "coker-res-bar" => {
            let out = picard::coker_res_bar(ctx, mg, delta)?;
            tags.push("restriction-cokernel-sequence".into());
            assumptions.push("the Jacobian of the curve has endomorphism ring Z".into());
            json!({
                "ab_piece": group_value(&out.ab_piece),
                "r_g_piece": group_value(&out.r_g_piece),
                "total_order": out.total_order.as_ref().map(int_value),
                "extension_resolved": !out.extension_unresolved,
            })
        }
        "curve-ns" => {
            mg.h_hat_rank()?;
            tags.push("fixed-curve-neron-severi-rank".into());
            assumptions.push("the Jacobian of the curve has endomorphism ring Z".into());
            json!({"rank": picard::curve_ns_rank(ctx)})
        }
        "genus0-report" => {
            if args.g != 0 {
                return Err(Error::GenusOutOfRange(
                    "genus0-report is the genus-zero presentation".into(),
                ));
            }
            let out = picard::genus0_report(ctx, args.n, delta)?;
            tags.push("genus-zero-restriction-isomorphism".into());
            json!({
                "free_rank": out.rank,
                "coker_omega": group_value(&out.coker_omega),
                "constrained_multipliers": out.constrained.basis.iter()
                    .map(|b| b.alpha.iter().map(rat_value).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            })
        }
        "cl-report" => {
            let r = picard::cl_report(ctx, mg, delta, args.characteristic)?;
            tags.push("class-group-transfer".into());
            assumptions.push("an adequate moduli space of the semistable locus exists".into());
            let mut m = Map::new();
            m.insert("applicable".into(), json!(r.applicable));
            m.insert("condition".into(), json!(r.condition));
            m.insert("genus_points_ok".into(), json!(r.genus_points_ok));
            m.insert("pgl2_caveat".into(), json!(r.pgl2_caveat));
            m.insert("moduli_space_known".into(), json!(r.moduli_space_known));
            m.insert(
                "rigidified_rpic_rank".into(),
                r.rig_rank.map(|v| json!(v)).unwrap_or(Value::Null),
            );
            m.insert(
                "note".into(),
                json!("the absolute Picard group of the moduli of curves is out of scope"),
            );
            Value::Object(m)
        }
        other => {
            return Err(Error::Parse(format!("unknown quantity {:?}", other)));
        }
    };
    Ok(Envelope { input, quantity: args.quantity.clone(), result, assumptions, tags })
}

fn parse_kind(s: &str) -> Result<FormKind> {
    Ok(match s {
        "full" => FormKind::Full,
        "full-even" => FormKind::FullEven,
        "d-even" => FormKind::DEven,
        "pair-even" => FormKind::PairEven,
        "pair-sc-even" => FormKind::PairScEven,
        "sc-even" => FormKind::ScEven,
        other => return Err(Error::Parse(format!("unknown form kind {:?}", other))),
    })
}
