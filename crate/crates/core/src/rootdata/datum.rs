//! A reductive group as a root datum over the fixed ambient space
//! (coroot coordinates of each simple factor) ⊕ Q^a, together with all the
//! canonical sub- and quotient lattices it determines.

use super::tables::SimpleFactor;
use crate::error::{Error, Result};
use crate::exactalg::num::{Int, Rat};
use crate::exactalg::{Lattice, LatticeQuotient, MatQ};
use num::Zero;
use std::fmt;

#[derive(Clone, Debug)]
pub struct ReductiveDatum {
    pub factors: Vec<SimpleFactor>,
    pub abelian_rank: usize,
    /// Cocharacter lattice of the maximal torus, full rank in the ambient.
    pub cochar: Lattice,
    /// Canonical printed form of the group spec that produced this datum,
    /// when one exists.
    pub name: Option<String>,
}

impl ReductiveDatum {
    pub fn new(factors: Vec<SimpleFactor>, abelian_rank: usize, cochar: Lattice) -> Self {
        ReductiveDatum { factors, abelian_rank, cochar, name: None }
    }

    pub fn ss_dim(&self) -> usize {
        self.factors.iter().map(|f| f.rank).sum()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ss_dim() + self.abelian_rank
    }

    /// Offset of factor `f`'s coordinate block.
    pub fn factor_offset(&self, f: usize) -> usize {
        self.factors[..f].iter().map(|x| x.rank).sum()
    }

    /// Offset of the abelian coordinate block.
    pub fn ab_offset(&self) -> usize {
        self.ss_dim()
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    pub fn is_torus(&self) -> bool {
        self.factors.is_empty()
    }

    /// Embeds a factor-coordinate vector into the ambient.
    pub fn embed_factor(&self, f: usize, v: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.ambient_dim()];
        let off = self.factor_offset(f);
        for (i, x) in v.iter().enumerate() {
            out[off + i] = x.clone();
        }
        out
    }

    /// Projection of an ambient vector onto the abelian block.
    pub fn p_ab(&self, v: &[Rat]) -> Vec<Rat> {
        v[self.ab_offset()..].to_vec()
    }

    /// Projection of an ambient vector onto the semisimple block.
    pub fn p_ss(&self, v: &[Rat]) -> Vec<Rat> {
        v[..self.ss_dim()].to_vec()
    }

    /// Ambient vector with the abelian block zeroed.
    pub fn ss_part(&self, v: &[Rat]) -> Vec<Rat> {
        let mut out = v.to_vec();
        for x in out.iter_mut().skip(self.ss_dim()) {
            *x = Rat::zero();
        }
        out
    }

    /// Ambient vector with the semisimple block zeroed.
    pub fn ab_part(&self, v: &[Rat]) -> Vec<Rat> {
        let mut out = v.to_vec();
        for x in out.iter_mut().take(self.ss_dim()) {
            *x = Rat::zero();
        }
        out
    }

    /// Matrix of the simple reflection at node `i` (1-based) of factor `f`,
    /// acting on the ambient (identity on the other blocks).
    pub fn reflection(&self, f: usize, i: usize) -> MatQ {
        let m = self.ambient_dim();
        let mut out = MatQ::identity(m);
        let s = self.factors[f].reflection(i);
        let off = self.factor_offset(f);
        let r = self.factors[f].rank;
        for a in 0..r {
            for b in 0..r {
                out[(off + a, off + b)] = s[(a, b)].clone();
            }
        }
        out
    }
}

impl fmt::Display for ReductiveDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = &self.name {
            return write!(f, "{}", n);
        }
        let tags: Vec<String> = self.factors.iter().map(|x| x.tag.to_string()).collect();
        write!(f, "datum[{}; a={}]", tags.join(" "), self.abelian_rank)
    }
}

/// Every canonical lattice of the datum, its duals, and the three
/// finite-or-mixed quotients used downstream.
#[derive(Clone, Debug)]
pub struct Parts {
    pub ambient: usize,
    pub ss_dim: usize,
    pub ab_dim: usize,
    /// Coroot lattice (cocharacters of the simply connected cover).
    pub lambda_sc: Lattice,
    /// Cocharacters of the maximal torus of the derived subgroup.
    pub lambda_d: Lattice,
    /// Cocharacters of the maximal torus of the semisimplification.
    pub lambda_ss: Lattice,
    /// Coweight lattice (cocharacters of the adjoint quotient's torus).
    pub lambda_ad: Lattice,
    /// Cocharacters of the radical torus.
    pub lambda_r: Lattice,
    /// Cocharacters of the maximal abelian quotient.
    pub lambda_ab: Lattice,
    /// Character lattices (duals under the standard pairing). Semisimple
    /// ones live in the semisimple dual block, abelian ones in the abelian
    /// dual block.
    pub dual_lambda: Lattice,
    pub dual_sc: Lattice,
    pub dual_d: Lattice,
    pub dual_ss: Lattice,
    pub dual_ad: Lattice,
    pub dual_r: Lattice,
    pub dual_ab: Lattice,
    /// pi_1(G) = cochar / coroots.
    pub pi1: LatticeQuotient,
    /// pi_1 of the semisimplification.
    pub pi1_ss: LatticeQuotient,
    /// pi_1 of the derived subgroup (the torsion of pi_1(G)).
    pub pi1_d: LatticeQuotient,
    /// Characters of the center: dual_lambda / dual_ad.
    pub center_chars: LatticeQuotient,
    /// Characters of the center of the derived subgroup: dual_d / dual_ad.
    pub dcenter_chars: LatticeQuotient,
    /// Canonical basis of lambda_ab restricted to abelian coordinates
    /// (ab_dim x ab_dim, invertible), and its inverse-transpose, the dual
    /// basis of the character lattice of G^ab.
    pub ab_basis: MatQ,
    pub ab_dual_basis: MatQ,
}

impl Parts {
    /// Embeds a vector of abelian coordinates into the ambient.
    pub fn embed_ab(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ab_dim);
        let mut out = vec![Rat::zero(); self.ambient];
        out[self.ss_dim..].clone_from_slice(v);
        out
    }

    /// The i-th basis vector of the character lattice of G^ab, embedded as an
    /// ambient functional (zero on the semisimple block).
    pub fn ab_char(&self, i: usize) -> Vec<Rat> {
        self.embed_ab(&self.ab_dual_basis.col(i))
    }

    /// Coordinates of an abelian-block vector in the canonical basis of
    /// lambda_ab; None if it is not in the span (cannot happen for full-rank
    /// data).
    pub fn ab_coords(&self, v_ab: &[Rat]) -> Option<Vec<Rat>> {
        self.ab_basis.solve(v_ab)
    }
}

/// Derives all sub/quotient lattices of the datum.
pub fn derive_parts(datum: &ReductiveDatum) -> Result<Parts> {
    let m = datum.ambient_dim();
    let ss = datum.ss_dim();
    let ab = datum.abelian_rank;
    let lambda = datum.cochar.clone();
    if lambda.ambient() != m {
        return Err(Error::AmbientMismatch { left: lambda.ambient(), right: m });
    }
    if lambda.rank() != m {
        return Err(Error::InvalidDatum("cocharacter lattice is not full rank".into()));
    }

    // Coroots: the standard basis of the semisimple block.
    let mut sc_cols = Vec::new();
    for i in 0..ss {
        let mut v = vec![Rat::zero(); m];
        v[i] = crate::exactalg::num::rat(1);
        sc_cols.push(v);
    }
    let lambda_sc =
        if ss == 0 { Lattice::zero(m) } else { Lattice::from_cols(m, &sc_cols) };

    // Coweights: block diagonal of the per-factor coweight matrices.
    let lambda_ad = if ss == 0 {
        Lattice::zero(m)
    } else {
        let mut cols = Vec::new();
        for (f, fac) in datum.factors.iter().enumerate() {
            for i in 1..=fac.rank {
                cols.push(datum.embed_factor(f, &fac.coweight(i)));
            }
        }
        Lattice::from_cols(m, &cols)
    };

    // Spans of the two blocks, as column matrices.
    let ss_span = {
        let mut cols = MatQ::zeros(m, ss);
        for i in 0..ss {
            cols[(i, i)] = crate::exactalg::num::rat(1);
        }
        cols
    };
    let ab_span = {
        let mut cols = MatQ::zeros(m, ab);
        for i in 0..ab {
            cols[(ss + i, i)] = crate::exactalg::num::rat(1);
        }
        cols
    };

    let lambda_d = lambda.saturate(&ss_span)?;
    let lambda_r = lambda.saturate(&ab_span)?;

    // Projections.
    let proj = |keep_ss: bool| {
        let mut p = MatQ::zeros(m, m);
        for i in 0..m {
            if (i < ss) == keep_ss {
                p[(i, i)] = crate::exactalg::num::rat(1);
            }
        }
        p
    };
    let lambda_ss = lambda.map(&proj(true));
    let lambda_ab = lambda.map(&proj(false));

    // Duals with respect to the standard pairing of the ambient with its
    // dual copy; each lives in the span of its primal lattice.
    let dual_lambda = lambda.dual_std()?;
    let dual_sc = lambda_sc.dual_std()?;
    let dual_d = lambda_d.dual_std()?;
    let dual_ss = lambda_ss.dual_std()?;
    let dual_ad = lambda_ad.dual_std()?;
    let dual_r = lambda_r.dual_std()?;
    let dual_ab = lambda_ab.dual_std()?;

    let pi1 = LatticeQuotient::new(lambda.clone(), &lambda_sc)?;
    let pi1_ss = LatticeQuotient::new(lambda_ss.clone(), &lambda_sc)?;
    let pi1_d = LatticeQuotient::new(lambda_d.clone(), &lambda_sc)?;
    let center_chars = LatticeQuotient::new(dual_lambda.clone(), &dual_ad)?;
    let dcenter_chars = LatticeQuotient::new(dual_d.clone(), &dual_ad)?;

    // Canonical basis of Lambda(G^ab) on abelian coordinates.
    let mut ab_basis = MatQ::zeros(ab, ab);
    for (j, col) in lambda_ab.basis_cols().iter().enumerate() {
        for i in 0..ab {
            ab_basis[(i, j)] = col[ss + i].clone();
        }
    }
    let ab_dual_basis = if ab == 0 {
        MatQ::zeros(0, 0)
    } else {
        ab_basis
            .inverse()
            .ok_or_else(|| Error::InvalidDatum("abelian block is rank deficient".into()))?
            .transpose()
    };

    Ok(Parts {
        ambient: m,
        ss_dim: ss,
        ab_dim: ab,
        lambda_sc,
        lambda_d,
        lambda_ss,
        lambda_ad,
        lambda_r,
        lambda_ab,
        dual_lambda,
        dual_sc,
        dual_d,
        dual_ss,
        dual_ad,
        dual_r,
        dual_ab,
        pi1,
        pi1_ss,
        pi1_d,
        center_chars,
        dcenter_chars,
        ab_basis,
        ab_dual_basis,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    RankDeficient,
    MissingCoroot { factor: usize, node: usize },
    NotInCoweightLattice { generator: usize },
    NotWeylStable { factor: usize, node: usize, generator: usize },
    BadFundGroup { factor: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::RankDeficient => write!(f, "cocharacter lattice is not full rank"),
            Violation::MissingCoroot { factor, node } => {
                write!(f, "coroot {} of factor {} missing from the cocharacter lattice", node, factor)
            }
            Violation::NotInCoweightLattice { generator } => {
                write!(f, "generator {} projects outside the coweight lattice", generator)
            }
            Violation::NotWeylStable { factor, node, generator } => write!(
                f,
                "generator {} not stable under reflection {} of factor {}",
                generator, node, factor
            ),
            Violation::BadFundGroup { factor } => {
                write!(f, "factor {} table has an inconsistent coweight/coroot quotient", factor)
            }
        }
    }
}

/// Checks the datum invariants; reports violations instead of failing.
pub fn validate_datum(datum: &ReductiveDatum) -> Vec<Violation> {
    let mut out = Vec::new();
    let m = datum.ambient_dim();
    if datum.cochar.ambient() != m || datum.cochar.rank() != m {
        out.push(Violation::RankDeficient);
        return out;
    }
    // Coroots must be cocharacters.
    for (f, fac) in datum.factors.iter().enumerate() {
        for i in 0..fac.rank {
            let mut v = vec![Rat::zero(); m];
            v[datum.factor_offset(f) + i] = crate::exactalg::num::rat(1);
            if !datum.cochar.contains(&v) {
                out.push(Violation::MissingCoroot { factor: f, node: i + 1 });
            }
        }
        let expected = super::tables::expected_fund_group(fac.tag);
        if fac.fund_group != expected {
            out.push(Violation::BadFundGroup { factor: f });
        }
    }
    // Semisimple projections must lie in the coweight lattice.
    let gens = datum.cochar.basis_cols();
    for (gi, g) in gens.iter().enumerate() {
        let mut ok = true;
        for (f, fac) in datum.factors.iter().enumerate() {
            let off = datum.factor_offset(f);
            let block: Vec<Rat> = g[off..off + fac.rank].to_vec();
            if !block.iter().all(|x| x.is_zero()) && !fac.coweight_lattice().contains(&block) {
                ok = false;
            }
        }
        if !ok {
            out.push(Violation::NotInCoweightLattice { generator: gi });
        }
    }
    // Redundant Weyl-stability certificate: s(x) - x must be a coroot sum.
    if out.is_empty() {
        let sc = {
            let ss = datum.ss_dim();
            let mut cols = Vec::new();
            for i in 0..ss {
                let mut v = vec![Rat::zero(); m];
                v[i] = crate::exactalg::num::rat(1);
                cols.push(v);
            }
            if ss == 0 { Lattice::zero(m) } else { Lattice::from_cols(m, &cols) }
        };
        for (f, fac) in datum.factors.iter().enumerate() {
            for i in 1..=fac.rank {
                let s = datum.reflection(f, i);
                for (gi, g) in gens.iter().enumerate() {
                    let sx = s.mul_vec(g);
                    let diff: Vec<Rat> =
                        sx.iter().zip(g.iter()).map(|(a, b)| a - b).collect();
                    if !sc.contains(&diff) {
                        out.push(Violation::NotWeylStable { factor: f, node: i, generator: gi });
                    }
                }
            }
        }
    }
    out
}

/// Order of a class in a quotient, as an Int with 0 meaning infinite.
pub fn class_order(q: &LatticeQuotient, v: &[Rat]) -> Result<Int> {
    q.class_order(v)
}
