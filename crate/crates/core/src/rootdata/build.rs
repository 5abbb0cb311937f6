//! Named group builders, products, central twists, and the group-spec
//! grammar that names them on the command line.

use super::datum::ReductiveDatum;
use super::tables::{simple_factor_table, SimpleFactor, TypeTag};
use crate::error::{Error, Result};
use crate::exactalg::num::{int, rat, Int, Rat};
use crate::exactalg::{Lattice, LatticeQuotient};
use num::{ToPrimitive, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GroupSpec {
    Torus(usize),
    Gl(usize),
    Sl(usize),
    SlModMu(usize, usize),
    Pgl(usize),
    Sp(usize),
    PSp(usize),
    Spin(usize),
    So(usize),
    PSo(usize),
    OmegaPlus(usize),
    OmegaMinus(usize),
    E6Sc,
    E6Ad,
    E7Sc,
    E7Ad,
    E8,
    F4,
    G2,
    Product(Vec<GroupSpec>),
    /// C[mu:k](H): (H x Gm) / mu_k for a central mu_k of H.
    Twist(usize, Box<GroupSpec>),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Torus(a) => write!(f, "torus:{}", a),
            GroupSpec::Gl(n) => write!(f, "GL:{}", n),
            GroupSpec::Sl(n) => write!(f, "SL:{}", n),
            GroupSpec::SlModMu(n, r) => write!(f, "SL:{}/mu:{}", n, r),
            GroupSpec::Pgl(n) => write!(f, "PGL:{}", n),
            GroupSpec::Sp(m) => write!(f, "Sp:{}", m),
            GroupSpec::PSp(m) => write!(f, "PSp:{}", m),
            GroupSpec::Spin(m) => write!(f, "Spin:{}", m),
            GroupSpec::So(m) => write!(f, "SO:{}", m),
            GroupSpec::PSo(m) => write!(f, "PSO:{}", m),
            GroupSpec::OmegaPlus(m) => write!(f, "Omega+:{}", m),
            GroupSpec::OmegaMinus(m) => write!(f, "Omega-:{}", m),
            GroupSpec::E6Sc => write!(f, "E6sc"),
            GroupSpec::E6Ad => write!(f, "E6ad"),
            GroupSpec::E7Sc => write!(f, "E7sc"),
            GroupSpec::E7Ad => write!(f, "E7ad"),
            GroupSpec::E8 => write!(f, "E8"),
            GroupSpec::F4 => write!(f, "F4"),
            GroupSpec::G2 => write!(f, "G2"),
            GroupSpec::Product(xs) => {
                let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
                write!(f, "{}", parts.join(" x "))
            }
            GroupSpec::Twist(k, h) => write!(f, "C[mu:{}]({})", k, h),
        }
    }
}

/// Splits at top level on 'x' (ignoring separators inside parentheses).
fn split_product(s: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' | '[' => {
                depth += 1;
                cur.push(ch);
            }
            ')' | ']' => {
                depth = depth.saturating_sub(1);
                cur.push(ch);
            }
            'x' if depth == 0 => {
                parts.push(cur.trim().to_string());
                cur.clear();
            }
            _ => cur.push(ch),
        }
    }
    parts.push(cur.trim().to_string());
    parts
}

pub fn parse_group_spec(s: &str) -> Result<GroupSpec> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty group spec".into()));
    }
    let parts = split_product(s);
    if parts.len() > 1 {
        let terms: Result<Vec<GroupSpec>> = parts.iter().map(|p| parse_term(p)).collect();
        return Ok(GroupSpec::Product(terms?));
    }
    parse_term(&parts[0])
}

fn parse_term(s: &str) -> Result<GroupSpec> {
    let bad = |msg: &str| Error::Parse(format!("{}: {:?}", msg, s));
    let s = s.trim();
    if let Some(rest) = s.strip_prefix("C[mu:") {
        let close = rest.find(']').ok_or_else(|| bad("missing ']' in twist"))?;
        let k: usize = rest[..close].parse().map_err(|_| bad("bad twist order"))?;
        let inner = rest[close + 1..].trim();
        let inner = inner
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| bad("twist body must be parenthesized"))?;
        if k == 0 {
            return Err(bad("twist order must be positive"));
        }
        return Ok(GroupSpec::Twist(k, Box::new(parse_group_spec(inner)?)));
    }
    let num_after = |prefix: &str| -> Option<usize> {
        s.strip_prefix(prefix).and_then(|r| r.parse::<usize>().ok())
    };
    if let Some(r) = s.strip_prefix("SL:") {
        if let Some((n, mu)) = r.split_once("/mu:") {
            let n: usize = n.parse().map_err(|_| bad("bad rank"))?;
            let mu: usize = mu.parse().map_err(|_| bad("bad isogeny order"))?;
            return Ok(GroupSpec::SlModMu(n, mu));
        }
        let n: usize = r.parse().map_err(|_| bad("bad rank"))?;
        return Ok(GroupSpec::Sl(n));
    }
    if let Some(a) = num_after("torus:") {
        return Ok(GroupSpec::Torus(a));
    }
    if let Some(n) = num_after("GL:") {
        return Ok(GroupSpec::Gl(n));
    }
    if let Some(n) = num_after("PGL:") {
        return Ok(GroupSpec::Pgl(n));
    }
    if let Some(m) = num_after("PSp:") {
        return Ok(GroupSpec::PSp(m));
    }
    if let Some(m) = num_after("Sp:") {
        return Ok(GroupSpec::Sp(m));
    }
    if let Some(m) = num_after("Spin:") {
        return Ok(GroupSpec::Spin(m));
    }
    if let Some(m) = num_after("PSO:") {
        return Ok(GroupSpec::PSo(m));
    }
    if let Some(m) = num_after("SO:") {
        return Ok(GroupSpec::So(m));
    }
    if let Some(m) = num_after("Omega+:") {
        return Ok(GroupSpec::OmegaPlus(m));
    }
    if let Some(m) = num_after("Omega-:") {
        return Ok(GroupSpec::OmegaMinus(m));
    }
    match s {
        "E6sc" => Ok(GroupSpec::E6Sc),
        "E6ad" => Ok(GroupSpec::E6Ad),
        "E7sc" => Ok(GroupSpec::E7Sc),
        "E7ad" => Ok(GroupSpec::E7Ad),
        "E8" => Ok(GroupSpec::E8),
        "F4" => Ok(GroupSpec::F4),
        "G2" => Ok(GroupSpec::G2),
        _ => Err(bad("unknown builder")),
    }
}

/// Builds the datum named by a spec string.
pub fn build_named(spec: &str) -> Result<ReductiveDatum> {
    let ast = parse_group_spec(spec)?;
    ast.build()
}

impl GroupSpec {
    pub fn build(&self) -> Result<ReductiveDatum> {
        let (mut datum, _) = self.build_with_generator()?;
        datum.name = Some(self.to_string());
        Ok(datum)
    }

    /// Builds the datum together with the canonical lift used to resolve
    /// integer component-class shorthands (zero when pi_1 has no canonical
    /// generator, e.g. simply connected groups or products).
    pub fn build_with_generator(&self) -> Result<(ReductiveDatum, Vec<Rat>)> {
        match self {
            GroupSpec::Torus(a) => {
                let datum = ReductiveDatum::new(vec![], *a, Lattice::standard(*a));
                let mut gen = vec![Rat::zero(); *a];
                if *a > 0 {
                    gen[0] = rat(1);
                }
                Ok((datum, gen))
            }
            GroupSpec::Gl(n) => match *n {
                0 => Err(Error::InvalidIsogeny("GL:0 is empty".into())),
                1 => GroupSpec::Torus(1).build_with_generator(),
                n => {
                    let f = simple_factor_table(TypeTag::A(n - 1))?;
                    let l = f.rank;
                    let mut cols: Vec<Vec<Rat>> = Vec::new();
                    for i in 0..l {
                        let mut v = vec![Rat::zero(); l + 1];
                        v[i] = rat(1);
                        cols.push(v);
                    }
                    let mut gen: Vec<Rat> = f.coweight(1);
                    gen.push(rat(1));
                    cols.push(gen.clone());
                    let datum =
                        ReductiveDatum::new(vec![f], 1, Lattice::from_cols(l + 1, &cols));
                    Ok((datum, gen))
                }
            },
            GroupSpec::Sl(n) => {
                let f = factor_for_a(*n)?;
                let l = f.rank;
                Ok((ReductiveDatum::new(vec![f], 0, Lattice::standard(l)), vec![Rat::zero(); l]))
            }
            GroupSpec::SlModMu(n, r) => {
                if *r == 0 || n % r != 0 {
                    return Err(Error::InvalidIsogeny(format!(
                        "mu:{} is not central in SL:{}",
                        r, n
                    )));
                }
                if *r == 1 {
                    return GroupSpec::Sl(*n).build_with_generator();
                }
                if *r == *n {
                    return GroupSpec::Pgl(*n).build_with_generator();
                }
                let f = factor_for_a(*n)?;
                let l = f.rank;
                let gen: Vec<Rat> =
                    f.coweight(1).iter().map(|x| x * rat((*n / *r) as i64)).collect();
                let mut cols: Vec<Vec<Rat>> = Lattice::standard(l).basis_cols();
                cols.push(gen.clone());
                Ok((ReductiveDatum::new(vec![f], 0, Lattice::from_cols(l, &cols)), gen))
            }
            GroupSpec::Pgl(n) => {
                let f = factor_for_a(*n)?;
                let gen = f.coweight(1);
                let (d, _) = adjoint_datum(f)?;
                Ok((d, gen))
            }
            GroupSpec::Sp(m) => {
                let l = even_half(*m, "Sp")?;
                let f = factor_for_cl(l)?;
                let l = f.rank;
                Ok((ReductiveDatum::new(vec![f], 0, Lattice::standard(l)), vec![Rat::zero(); l]))
            }
            GroupSpec::PSp(m) => {
                let l = even_half(*m, "PSp")?;
                let f = factor_for_cl(l)?;
                let gen = f.coweight(f.rank);
                let (d, _) = adjoint_datum(f)?;
                Ok((d, gen))
            }
            GroupSpec::Spin(m) => {
                let f = factor_for_spin(*m)?;
                let l = f.rank;
                Ok((ReductiveDatum::new(vec![f], 0, Lattice::standard(l)), vec![Rat::zero(); l]))
            }
            GroupSpec::So(m) => {
                let f = factor_for_spin(*m)?;
                if m % 2 == 1 {
                    // Full coweight lattice: index two over the coroots.
                    let gen = f.coweight(1);
                    let (d, _) = adjoint_datum(f)?;
                    Ok((d, gen))
                } else {
                    let l = f.rank;
                    let gen = f.coweight(1);
                    let mut cols = Lattice::standard(l).basis_cols();
                    cols.push(gen.clone());
                    Ok((ReductiveDatum::new(vec![f], 0, Lattice::from_cols(l, &cols)), gen))
                }
            }
            GroupSpec::PSo(m) => {
                let l = even_half(*m, "PSO")?;
                if l < 3 {
                    return Err(Error::InvalidIsogeny("PSO needs rank >= 3".into()));
                }
                let f = simple_factor_table(TypeTag::D(l))?;
                let gen = f.coweight(l);
                let (d, _) = adjoint_datum(f)?;
                Ok((d, gen))
            }
            GroupSpec::OmegaPlus(m) | GroupSpec::OmegaMinus(m) => {
                let l = even_half(*m, "Omega")?;
                if l < 3 || l % 2 != 0 {
                    return Err(Error::InvalidIsogeny(
                        "half-spin groups need even rank >= 4".into(),
                    ));
                }
                let f = simple_factor_table(TypeTag::D(l))?;
                let node = if matches!(self, GroupSpec::OmegaPlus(_)) { l } else { l - 1 };
                let gen = f.coweight(node);
                let mut cols = Lattice::standard(l).basis_cols();
                cols.push(gen.clone());
                Ok((ReductiveDatum::new(vec![f], 0, Lattice::from_cols(l, &cols)), gen))
            }
            GroupSpec::E6Sc => sc_datum(TypeTag::E6),
            GroupSpec::E7Sc => sc_datum(TypeTag::E7),
            GroupSpec::E8 => sc_datum(TypeTag::E8),
            GroupSpec::F4 => sc_datum(TypeTag::F4),
            GroupSpec::G2 => sc_datum(TypeTag::G2),
            GroupSpec::E6Ad => {
                let f = simple_factor_table(TypeTag::E6)?;
                let gen = f.coweight(1);
                let (d, _) = adjoint_datum(f)?;
                Ok((d, gen))
            }
            GroupSpec::E7Ad => {
                let f = simple_factor_table(TypeTag::E7)?;
                let gen = f.coweight(7);
                let (d, _) = adjoint_datum(f)?;
                Ok((d, gen))
            }
            GroupSpec::Product(terms) => {
                let mut data = Vec::new();
                for t in terms {
                    data.push(t.build()?);
                }
                let prod = product(&data)?;
                let gen = vec![Rat::zero(); prod.ambient_dim()];
                Ok((prod, gen))
            }
            GroupSpec::Twist(k, inner) => {
                let h = inner.build()?;
                let quotient = adjoint_quotient(&h)?;
                let xi = canonical_order_k_class(&quotient, *k)?;
                let twisted = central_twist(&h, &xi)?;
                let mut gen = xi.clone();
                gen.push(rat(1));
                Ok((twisted, gen))
            }
        }
    }

    /// Resolves the integer shorthand for a component class to a lift.
    pub fn delta_lift(&self, k: i64) -> Result<Vec<Rat>> {
        let (_, gen) = self.build_with_generator()?;
        Ok(gen.iter().map(|x| x * rat(k)).collect())
    }
}

fn factor_for_a(n: usize) -> Result<SimpleFactor> {
    if n < 2 {
        return Err(Error::InvalidIsogeny(format!("type A needs n >= 2, got {}", n)));
    }
    simple_factor_table(TypeTag::A(n - 1))
}

fn factor_for_cl(l: usize) -> Result<SimpleFactor> {
    match l {
        0 => Err(Error::InvalidIsogeny("symplectic rank must be positive".into())),
        1 => simple_factor_table(TypeTag::A(1)),
        l => simple_factor_table(TypeTag::C(l)),
    }
}

fn factor_for_spin(m: usize) -> Result<SimpleFactor> {
    match m {
        0..=2 | 4 => Err(Error::InvalidIsogeny(format!("no spin datum in dimension {}", m))),
        3 => simple_factor_table(TypeTag::A(1)),
        5 => simple_factor_table(TypeTag::B(2)),
        6 => simple_factor_table(TypeTag::D(3)),
        m if m % 2 == 1 => simple_factor_table(TypeTag::B(m / 2)),
        m => simple_factor_table(TypeTag::D(m / 2)),
    }
}

fn even_half(m: usize, what: &str) -> Result<usize> {
    if m == 0 || !m.is_multiple_of(2) {
        return Err(Error::InvalidIsogeny(format!("{}:{} needs an even dimension", what, m)));
    }
    Ok(m / 2)
}

fn sc_datum(tag: TypeTag) -> Result<(ReductiveDatum, Vec<Rat>)> {
    let f = simple_factor_table(tag)?;
    let l = f.rank;
    Ok((ReductiveDatum::new(vec![f], 0, Lattice::standard(l)), vec![Rat::zero(); l]))
}

fn adjoint_datum(f: SimpleFactor) -> Result<(ReductiveDatum, Vec<Rat>)> {
    let l = f.rank;
    let lat = f.coweight_lattice();
    Ok((ReductiveDatum::new(vec![f], 0, lat), vec![Rat::zero(); l]))
}

/// Direct product of data: factor blocks concatenate, abelian ranks add.
pub fn product(data: &[ReductiveDatum]) -> Result<ReductiveDatum> {
    let ss_total: usize = data.iter().map(|d| d.ss_dim()).sum();
    let ab_total: usize = data.iter().map(|d| d.abelian_rank).sum();
    let m = ss_total + ab_total;
    let mut factors = Vec::new();
    let mut cols: Vec<Vec<Rat>> = Vec::new();
    let mut ss_off = 0;
    let mut ab_off = 0;
    for d in data {
        for g in d.cochar.basis_cols() {
            let mut v = vec![Rat::zero(); m];
            v[ss_off..ss_off + d.ss_dim()].clone_from_slice(&g[..d.ss_dim()]);
            for i in 0..d.abelian_rank {
                v[ss_total + ab_off + i] = g[d.ss_dim() + i].clone();
            }
            cols.push(v);
        }
        ss_off += d.ss_dim();
        ab_off += d.abelian_rank;
        factors.extend(d.factors.iter().cloned());
    }
    let cochar =
        if cols.is_empty() { Lattice::zero(m) } else { Lattice::from_cols(m, &cols) };
    Ok(ReductiveDatum::new(factors, ab_total, cochar))
}

/// The quotient coweights / cocharacters of a semisimple datum, whose
/// classes parameterize the center.
pub fn adjoint_quotient(h: &ReductiveDatum) -> Result<LatticeQuotient> {
    if h.abelian_rank != 0 {
        return Err(Error::InvalidIsogeny("central twists need a semisimple base".into()));
    }
    let m = h.ambient_dim();
    let mut cols = Vec::new();
    for (f, fac) in h.factors.iter().enumerate() {
        for i in 1..=fac.rank {
            cols.push(h.embed_factor(f, &fac.coweight(i)));
        }
    }
    let ad = Lattice::from_cols(m, &cols);
    LatticeQuotient::new(ad, &h.cochar)
}

/// Picks the canonical class of order k in the quotient: (d_t/k) times the
/// last canonical generator, where d_t is the largest invariant factor.
fn canonical_order_k_class(q: &LatticeQuotient, k: usize) -> Result<Vec<Rat>> {
    let kz = int(k as i64);
    let factors = q.factors();
    let dt = factors
        .iter()
        .filter(|d| !d.is_zero())
        .max()
        .cloned()
        .unwrap_or_else(Int::zero);
    if k == 1 {
        return Ok(q.representative(&vec![Int::zero(); factors.len()]));
    }
    if dt.is_zero() || !(&dt % &kz).is_zero() {
        return Err(Error::InvalidIsogeny(format!(
            "center has no cyclic subgroup of order {}",
            k
        )));
    }
    let mut class = vec![Int::zero(); factors.len()];
    let pos = factors.iter().rposition(|d| *d == dt).expect("nonzero factor");
    class[pos] = &dt / &kz;
    Ok(q.representative(&class))
}

/// (H x Gm) / mu_k for semisimple H, where mu_k is named by a coweight-class
/// xi of order k: the cocharacter lattice becomes (Lambda(T_H) + kZ) + <(xi, 1)>,
/// so the derived subgroup is H and the semisimplification is H / <xi>.
pub fn central_twist(h: &ReductiveDatum, xi: &[Rat]) -> Result<ReductiveDatum> {
    if h.abelian_rank != 0 {
        return Err(Error::InvalidIsogeny("central twists need a semisimple base".into()));
    }
    let quotient = adjoint_quotient(h)?;
    let order = quotient.class_order(xi).map_err(|_| {
        Error::InvalidIsogeny("twist class must lie in the coweight lattice".into())
    })?;
    let k = order.to_i64().ok_or_else(|| {
        Error::InvalidIsogeny("twist class must have finite order".into())
    })?;
    let k = if k == 0 { 1 } else { k };
    let ss = h.ambient_dim();
    let m = ss + 1;
    let mut cols: Vec<Vec<Rat>> = Vec::new();
    for g in h.cochar.basis_cols() {
        let mut v = g.clone();
        v.push(Rat::zero());
        cols.push(v);
    }
    let mut v = vec![Rat::zero(); m];
    v[ss] = rat(k);
    cols.push(v);
    let mut v: Vec<Rat> = xi.to_vec();
    v.push(rat(1));
    cols.push(v);
    Ok(ReductiveDatum::new(h.factors.clone(), 1, Lattice::from_cols(m, &cols)))
}

/// Enumerates divisors of n in increasing order.
pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}
