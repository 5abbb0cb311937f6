//! Independent closed-form oracles for the per-family multiplier and
//! cokernel tables, plus a small-rank brute-force Weyl solver. These share
//! no code with the generic engine; every value is transcribed from the
//! per-type case analysis, with multipliers expressed in units of the basic
//! form of the type.

use crate::error::{Error, Result};
use crate::exactalg::num::{gcd_i64, int, lcm_i64, v2, Int};
use crate::exactalg::{FgAbGroup, MatQ, MatZ};
use crate::rootdata::TypeTag;
use num::Zero;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DIso {
    Spin,
    So,
    PSo,
    OmegaPlus,
    OmegaMinus,
}

impl DIso {
    fn is_omega(self) -> bool {
        matches!(self, DIso::OmegaPlus | DIso::OmegaMinus)
    }

    /// Partial order of the isogeny tower Spin < SO, Omega < PSO.
    fn leq(self, other: DIso) -> bool {
        use DIso::*;
        match (self, other) {
            (a, b) if a == b => true,
            (Spin, _) => true,
            (_, PSo) => true,
            _ => false,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BcIso {
    SpinOdd,
    SoOdd,
    Sp,
    PSp,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EGroup {
    E8,
    E7Sc,
    E7Ad,
    E6Sc,
    E6Ad,
}

/// Family parameters keyed exactly as the per-type tables state them.
#[derive(Clone, Debug)]
pub enum FamilyParams {
    /// Derived subgroup SL_n/mu_r, semisimplification SL_n/mu_s (r | s | n),
    /// component class with image delta in Z/s.
    A { n: i64, r: i64, s: i64, delta: i64 },
    /// Types B_l / C_l: the derived subgroup and semisimplification, and
    /// whether the image class in pi_1(G^ss) vanishes.
    Bc { l: i64, d: BcIso, ss: BcIso, delta_ss_zero: bool },
    /// Type D_l: isogeny pair and the order of the image class in
    /// pi_1(G^ss) (1, 2 or 4).
    D { l: i64, d: DIso, ss: DIso, delta_ord: i64 },
    /// Exceptional types: isogeny pair and vanishing of the image class.
    E { d: EGroup, ss: EGroup, delta_ss_zero: bool },
    /// F4 and G2 carry no parameters beyond the type.
    Fg { tag: TypeTag },
    /// A torus of the given dimension with a class of the given
    /// divisibility, at genus g with no marked points.
    Torus { dim: i64, div: i64, g: i64 },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Quantity {
    MultiplierScEven,
    MultiplierEven,
    CokerRG,
    CokerEv,
    CokerEvTilde,
    TorusCokerOmega,
    TorusCokerGammaBar,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OracleValue {
    Multiplier(Int),
    Group(FgAbGroup),
}

impl OracleValue {
    pub fn group(&self) -> Option<&FgAbGroup> {
        match self {
            OracleValue::Group(g) => Some(g),
            _ => None,
        }
    }

    pub fn multiplier(&self) -> Option<&Int> {
        match self {
            OracleValue::Multiplier(m) => Some(m),
            _ => None,
        }
    }
}

fn cyclic(n: i64) -> FgAbGroup {
    FgAbGroup::from_orders(&[int(n)])
}

pub fn oracle(params: &FamilyParams, quantity: Quantity) -> Result<OracleValue> {
    validate(params)?;
    use OracleValue::*;
    let v = match (params, quantity) {
        (FamilyParams::A { n, r, s, .. }, Quantity::MultiplierScEven) => {
            Multiplier(int(lcm_i64(r * s, *n) / n))
        }
        (FamilyParams::A { n, r, s, .. }, Quantity::MultiplierEven) => {
            let base = lcm_i64(r * s, *n) / n;
            Multiplier(int(if a_even_doubles(*n, *r, *s) { 2 * base } else { base }))
        }
        (FamilyParams::A { n, r, s, .. }, Quantity::CokerRG) => {
            Group(if a_even_doubles(*n, *r, *s) { cyclic(2) } else { FgAbGroup::trivial() })
        }
        (FamilyParams::A { n, r, s, delta }, Quantity::CokerEvTilde) => {
            let image = delta * (lcm_i64(r * s, *n) / (r * s));
            Group(cyclic(gcd_i64(image, n / r)))
        }
        (FamilyParams::A { n, r, s, delta }, Quantity::CokerEv) => {
            let mut image = delta * (lcm_i64(r * s, *n) / (r * s));
            if a_even_doubles(*n, *r, *s) {
                image *= 2;
            }
            Group(cyclic(gcd_i64(image, n / r)))
        }
        (FamilyParams::Bc { l, d, .. }, Quantity::MultiplierScEven) => Multiplier(int(
            match d {
                BcIso::SpinOdd | BcIso::SoOdd | BcIso::Sp => 1,
                BcIso::PSp => {
                    if l % 2 == 0 {
                        1
                    } else {
                        2
                    }
                }
            },
        )),
        (FamilyParams::Bc { l, d, .. }, Quantity::MultiplierEven) => Multiplier(int(match d {
            BcIso::SpinOdd | BcIso::Sp => 1,
            BcIso::SoOdd => 2,
            BcIso::PSp => {
                if l % 4 == 0 {
                    1
                } else if l % 2 == 0 {
                    2
                } else {
                    4
                }
            }
        })),
        (FamilyParams::Bc { l, d, .. }, Quantity::CokerRG) => Group(
            if *d == BcIso::SoOdd || (*d == BcIso::PSp && l % 4 != 0) {
                cyclic(2)
            } else {
                FgAbGroup::trivial()
            },
        ),
        (
            FamilyParams::Bc { l, d, delta_ss_zero, .. },
            Quantity::CokerEv | Quantity::CokerEvTilde,
        ) => Group(
            if matches!(d, BcIso::SoOdd | BcIso::PSp)
                || (*d == BcIso::Sp && !delta_ss_zero && l % 2 != 0)
            {
                FgAbGroup::trivial()
            } else {
                cyclic(2)
            },
        ),
        (FamilyParams::D { l, d, ss, .. }, Quantity::MultiplierScEven) => {
            let m = if *d == DIso::Spin
                || (*d == DIso::So && *ss == DIso::So)
                || (d.is_omega() && ss == d && l % 4 == 0)
            {
                1
            } else if *d == DIso::PSo && l % 2 != 0 {
                4
            } else {
                2
            };
            Multiplier(int(m))
        }
        (FamilyParams::D { l, d, ss, .. }, Quantity::MultiplierEven) => {
            let m = match d {
                DIso::Spin => 1,
                DIso::So => 2,
                DIso::PSo => {
                    if l % 4 == 0 {
                        2
                    } else if l % 2 == 0 {
                        4
                    } else {
                        8
                    }
                }
                _ if ss == d => {
                    // Evenness on the half-spin lattice asks alpha * l/4 to be
                    // even, so the answer depends on l mod 8.
                    if l % 8 == 0 {
                        1
                    } else if l % 8 == 4 {
                        2
                    } else {
                        4
                    }
                }
                _ => {
                    if l % 4 == 0 {
                        2
                    } else {
                        4
                    }
                }
            };
            Multiplier(int(m))
        }
        (p @ FamilyParams::D { .. }, Quantity::CokerRG) => {
            let sc = oracle(p, Quantity::MultiplierScEven)?;
            let ev = oracle(p, Quantity::MultiplierEven)?;
            let ratio = ev.multiplier().unwrap() / sc.multiplier().unwrap();
            Group(if ratio == int(2) { cyclic(2) } else { FgAbGroup::trivial() })
        }
        (FamilyParams::D { l, d, ss, delta_ord }, Quantity::CokerEvTilde) => Group(match d {
            DIso::PSo => FgAbGroup::trivial(),
            DIso::Spin => match delta_ord {
                1 => {
                    if l % 2 != 0 {
                        cyclic(4)
                    } else {
                        FgAbGroup::from_orders(&[int(2), int(2)])
                    }
                }
                2 => cyclic(2),
                _ => FgAbGroup::trivial(),
            },
            DIso::So => {
                if *ss == DIso::So {
                    if *delta_ord == 1 {
                        cyclic(2)
                    } else {
                        FgAbGroup::trivial()
                    }
                } else if *delta_ord != 4 {
                    cyclic(2)
                } else {
                    FgAbGroup::trivial()
                }
            }
            _ => {
                if ss == d {
                    // The sc-even generator is (-,-) only when 4 | l; at
                    // l = 2 mod 4 it is 2(-,-), whose evaluation class dies.
                    if *delta_ord == 1 || l % 4 == 2 {
                        cyclic(2)
                    } else {
                        FgAbGroup::trivial()
                    }
                } else {
                    cyclic(2)
                }
            }
        }),
        (FamilyParams::D { l, d, ss, delta_ord }, Quantity::CokerEv) => Group(match d {
            DIso::PSo => FgAbGroup::trivial(),
            DIso::Spin => match delta_ord {
                1 => {
                    if l % 2 != 0 {
                        cyclic(4)
                    } else {
                        FgAbGroup::from_orders(&[int(2), int(2)])
                    }
                }
                2 => cyclic(2),
                _ => FgAbGroup::trivial(),
            },
            DIso::So => {
                if *ss == DIso::So || *delta_ord != 4 {
                    cyclic(2)
                } else {
                    FgAbGroup::trivial()
                }
            }
            // Half-spin derived subgroup: the even generator is the basic
            // form itself when 8 | l, so a nonzero class then surjects.
            _ => {
                if ss == d && l % 8 == 0 && *delta_ord != 1 {
                    FgAbGroup::trivial()
                } else {
                    cyclic(2)
                }
            }
        }),
        (FamilyParams::E { d, .. }, Quantity::MultiplierScEven) => Multiplier(int(match d {
            EGroup::E7Ad => 2,
            EGroup::E6Ad => 3,
            _ => 1,
        })),
        (FamilyParams::E { d, .. }, Quantity::MultiplierEven) => Multiplier(int(match d {
            EGroup::E7Ad => 4,
            EGroup::E6Ad => 3,
            _ => 1,
        })),
        (FamilyParams::E { d, .. }, Quantity::CokerRG) => {
            Group(if *d == EGroup::E7Ad { cyclic(2) } else { FgAbGroup::trivial() })
        }
        (
            FamilyParams::E { d, ss, delta_ss_zero },
            Quantity::CokerEv | Quantity::CokerEvTilde,
        ) => Group(
            if *ss == EGroup::E7Sc
                || (*d == EGroup::E7Sc && *ss == EGroup::E7Ad && *delta_ss_zero)
            {
                cyclic(2)
            } else if *ss == EGroup::E6Sc
                || (*d == EGroup::E6Sc && *ss == EGroup::E6Ad && *delta_ss_zero)
            {
                cyclic(3)
            } else {
                FgAbGroup::trivial()
            },
        ),
        (FamilyParams::Fg { .. }, Quantity::MultiplierScEven | Quantity::MultiplierEven) => {
            Multiplier(int(1))
        }
        (
            FamilyParams::Fg { .. },
            Quantity::CokerRG | Quantity::CokerEv | Quantity::CokerEvTilde,
        ) => Group(FgAbGroup::trivial()),
        (FamilyParams::Torus { dim, div, g }, Quantity::TorusCokerOmega) => {
            let first = gcd_i64(2 * g - 2, div + 1 - g);
            let rest = gcd_i64(g - 1, *div);
            let mut orders = vec![int(first)];
            orders.extend(std::iter::repeat_n(int(rest), (*dim - 1) as usize));
            Group(FgAbGroup::from_orders(&orders))
        }
        (FamilyParams::Torus { dim, div, g }, Quantity::TorusCokerGammaBar) => {
            if *g == 1 && *div == 0 {
                // The displayed expression degenerates; the image is trivial.
                Group(FgAbGroup::trivial())
            } else {
                let m = 2 * g - 2;
                let quot = |d: i64| if m == 0 { 0 } else { m / d };
                let first = quot(gcd_i64(m, div + 1 - g));
                let rest = quot(gcd_i64(g - 1, *div));
                let mut orders = vec![int(first)];
                orders.extend(std::iter::repeat_n(int(rest), (*dim - 1) as usize));
                Group(FgAbGroup::from_orders(&orders))
            }
        }
        _ => {
            return Err(Error::InvalidParams(format!(
                "quantity {:?} undefined for this family",
                quantity
            )))
        }
    };
    Ok(v)
}

/// The type-A doubling condition: v2(r) = v2(s) >= v2(n)/2 > 0.
fn a_even_doubles(n: i64, r: i64, s: i64) -> bool {
    if n % 2 != 0 || r % 2 != 0 {
        return false;
    }
    let (vr, vs, vn) = (v2(r), v2(s), v2(n));
    vr == vs && 2 * vr >= vn
}

fn validate(params: &FamilyParams) -> Result<()> {
    let bad = |m: String| Err(Error::InvalidParams(m));
    match params {
        FamilyParams::A { n, r, s, delta } => {
            if *n < 2 || *r < 1 || s % r != 0 || n % s != 0 {
                return bad(format!("need r | s | n, got n={} r={} s={}", n, r, s));
            }
            if *delta < 0 || delta >= s {
                return bad(format!("class {} outside Z/{}", delta, s));
            }
        }
        FamilyParams::Bc { l, d, ss, delta_ss_zero } => {
            if *l < 2 {
                return bad("types B/C need rank >= 2".into());
            }
            let ok = matches!(
                (d, ss),
                (BcIso::SpinOdd, BcIso::SpinOdd)
                    | (BcIso::SpinOdd, BcIso::SoOdd)
                    | (BcIso::SoOdd, BcIso::SoOdd)
                    | (BcIso::Sp, BcIso::Sp)
                    | (BcIso::Sp, BcIso::PSp)
                    | (BcIso::PSp, BcIso::PSp)
            );
            if !ok {
                return bad(format!("invalid isogeny pair {:?} -> {:?}", d, ss));
            }
            if !*delta_ss_zero
                && matches!(ss, BcIso::SpinOdd | BcIso::Sp)
            {
                return bad("simply connected semisimplification forces a zero class".into());
            }
        }
        FamilyParams::D { l, d, ss, delta_ord } => {
            if *l < 3 {
                return bad("type D needs rank >= 3".into());
            }
            if (d.is_omega() || ss.is_omega()) && l % 2 != 0 {
                return bad("half-spin quotients need even rank".into());
            }
            if !d.leq(*ss) {
                return bad(format!("invalid isogeny pair {:?} -> {:?}", d, ss));
            }
            match delta_ord {
                1 => {}
                2 => {
                    if *ss == DIso::Spin {
                        return bad("pi_1(Spin) is trivial".into());
                    }
                }
                4 => {
                    if !(*ss == DIso::PSo && l % 2 != 0) {
                        return bad("order four requires the full quotient at odd rank".into());
                    }
                }
                _ => return bad(format!("invalid class order {}", delta_ord)),
            }
        }
        FamilyParams::E { d, ss, delta_ss_zero } => {
            use EGroup::*;
            let ok = matches!(
                (d, ss),
                (E8, E8) | (E7Sc, E7Sc) | (E7Sc, E7Ad) | (E7Ad, E7Ad) | (E6Sc, E6Sc)
                    | (E6Sc, E6Ad)
                    | (E6Ad, E6Ad)
            );
            if !ok {
                return bad(format!("invalid isogeny pair {:?} -> {:?}", d, ss));
            }
            if !*delta_ss_zero && matches!(ss, E8 | E7Sc | E6Sc) {
                return bad("simply connected semisimplification forces a zero class".into());
            }
        }
        FamilyParams::Fg { tag } => {
            if !matches!(tag, TypeTag::F4 | TypeTag::G2) {
                return bad(format!("not an F4/G2 family tag: {}", tag));
            }
        }
        FamilyParams::Torus { dim, div, g } => {
            if *dim < 1 || *g < 1 || *div < 0 {
                return bad(format!("invalid torus parameters dim={} div={} g={}", dim, div, g));
            }
        }
    }
    Ok(())
}

/// Internal identity replacing the ambiguous order bookkeeping in the
/// type-A and type-D evaluation statements: the order ratio between the two
/// evaluation cokernels is always 1 or 2.
pub fn order_ratio_ok(ev: &FgAbGroup, ev_tilde: &FgAbGroup) -> bool {
    match (ev.order(), ev_tilde.order()) {
        (Some(a), Some(b)) => {
            if b.is_zero() {
                return false;
            }
            let q = &a / &b;
            (&a % &b).is_zero() && (q == int(1) || q == int(2))
        }
        _ => false,
    }
}

/// Brute-force certification of the basic Gram at small rank: enumerates the
/// Weyl group by closing the simple reflections, solves the full invariance
/// system, intersects with the evenness congruences, and returns the minimal
/// generator.
pub fn bruteforce_invariant_forms(tag: TypeTag) -> Result<MatZ> {
    let l = tag.rank();
    if l > 3 {
        return Err(Error::RankTooLarge);
    }
    let table = crate::rootdata::simple_factor_table(tag)?;
    // Close the reflection matrices into the full Weyl group.
    let mut group: Vec<MatQ> = vec![MatQ::identity(l)];
    let gens: Vec<MatQ> = (1..=l).map(|i| table.reflection(i)).collect();
    let mut frontier = group.clone();
    while let Some(w) = frontier.pop() {
        for s in &gens {
            let next = s.mul(&w);
            if !group.contains(&next) {
                group.push(next.clone());
                frontier.push(next);
            }
        }
    }
    // Solve w^T X w = X for every w over the symmetric matrices.
    let dim = l * (l + 1) / 2;
    let idx = |i: usize, j: usize| {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        (0..i).map(|r| l - r).sum::<usize>() + (j - i)
    };
    let mut rows = Vec::new();
    for w in &group {
        for p in 0..l {
            for q in p..l {
                let mut row = vec![crate::exactalg::num::rat(0); dim];
                for a in 0..l {
                    for b in 0..l {
                        let c = &w[(a, p)] * &w[(b, q)];
                        row[idx(a, b)] += c;
                    }
                }
                row[idx(p, q)] -= crate::exactalg::num::rat(1);
                rows.push(row);
            }
        }
    }
    let kernel = MatQ::from_rows(&rows).kernel();
    if kernel.cols() != 1 {
        return Err(Error::InvalidParams(format!(
            "invariant forms of {} have rank {}",
            tag,
            kernel.cols()
        )));
    }
    let mut dir = kernel.col(0);
    if dir[idx(0, 0)] < crate::exactalg::num::rat(0) {
        for x in &mut dir {
            *x = -x.clone();
        }
    }
    // Minimal integral generator with even diagonal inside the line.
    let mut conds = Vec::new();
    for p in 0..l {
        for q in p..l {
            let coeff = vec![dir[idx(p, q)].clone()];
            if p == q {
                conds.push(crate::exactalg::Congruence::even(coeff));
            } else {
                conds.push(crate::exactalg::Congruence::integral(coeff));
            }
        }
    }
    let line = crate::exactalg::congruence_lattice(1, &conds);
    let gen = line.basis().col(0)[0].clone();
    let mut out = MatZ::zeros(l, l);
    for p in 0..l {
        for q in 0..l {
            let v = &gen * &dir[idx(p, q)];
            debug_assert!(crate::exactalg::num::is_int(&v));
            out[(p, q)] = v.numer().clone();
        }
    }
    Ok(out)
}

/// Weyl group order by brute-force closure (rank <= 3 only), used by tests.
pub fn weyl_order(tag: TypeTag) -> Result<usize> {
    let l = tag.rank();
    if l > 3 {
        return Err(Error::RankTooLarge);
    }
    let table = crate::rootdata::simple_factor_table(tag)?;
    let mut group: Vec<MatQ> = vec![MatQ::identity(l)];
    let gens: Vec<MatQ> = (1..=l).map(|i| table.reflection(i)).collect();
    let mut frontier = group.clone();
    while let Some(w) = frontier.pop() {
        for s in &gens {
            let next = s.mul(&w);
            if !group.contains(&next) {
                group.push(next.clone());
                frontier.push(next);
            }
        }
    }
    Ok(group.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_family_examples() {
        // n=4, r=s=2: the doubling condition holds (1 >= 1 > 0).
        let p = FamilyParams::A { n: 4, r: 2, s: 2, delta: 0 };
        assert_eq!(
            oracle(&p, Quantity::CokerRG).unwrap().group().unwrap().to_string(),
            "Z/2"
        );
        // GL_n shape: r=1, s=n: coker(ev-tilde) = Z/gcd(n, delta).
        for n in 2..=8i64 {
            for delta in 0..n {
                let p = FamilyParams::A { n, r: 1, s: n, delta };
                let g = oracle(&p, Quantity::CokerEvTilde).unwrap();
                let want = gcd_i64(delta, n);
                assert_eq!(g.group().unwrap(), &FgAbGroup::from_orders(&[int(want)]));
            }
        }
        // SL_n: r = s = 1, delta = 0: Z/n.
        let p = FamilyParams::A { n: 6, r: 1, s: 1, delta: 0 };
        assert_eq!(
            oracle(&p, Quantity::CokerEv).unwrap().group().unwrap(),
            &FgAbGroup::from_orders(&[int(6)])
        );
    }

    #[test]
    fn bc_and_e_examples() {
        let p = FamilyParams::Bc { l: 3, d: BcIso::Sp, ss: BcIso::Sp, delta_ss_zero: true };
        assert_eq!(
            oracle(&p, Quantity::CokerEv).unwrap().group().unwrap().to_string(),
            "Z/2"
        );
        let p = FamilyParams::E { d: EGroup::E6Sc, ss: EGroup::E6Sc, delta_ss_zero: true };
        assert_eq!(
            oracle(&p, Quantity::CokerEv).unwrap().group().unwrap().to_string(),
            "Z/3"
        );
        let p = FamilyParams::E { d: EGroup::E7Ad, ss: EGroup::E7Ad, delta_ss_zero: true };
        assert_eq!(
            oracle(&p, Quantity::CokerRG).unwrap().group().unwrap().to_string(),
            "Z/2"
        );
    }

    #[test]
    fn d_family_spin_branches() {
        let p = FamilyParams::D { l: 5, d: DIso::Spin, ss: DIso::Spin, delta_ord: 1 };
        assert_eq!(
            oracle(&p, Quantity::CokerEvTilde).unwrap().group().unwrap().to_string(),
            "Z/4"
        );
        let p = FamilyParams::D { l: 4, d: DIso::Spin, ss: DIso::Spin, delta_ord: 1 };
        assert_eq!(
            oracle(&p, Quantity::CokerEvTilde).unwrap().group().unwrap().to_string(),
            "Z/2 x Z/2"
        );
        // SO with a nonzero class: ev and ev-tilde differ by a factor 2.
        let p = FamilyParams::D { l: 4, d: DIso::So, ss: DIso::So, delta_ord: 2 };
        let ev = oracle(&p, Quantity::CokerEv).unwrap();
        let evt = oracle(&p, Quantity::CokerEvTilde).unwrap();
        assert_eq!(ev.group().unwrap().to_string(), "Z/2");
        assert!(evt.group().unwrap().is_trivial());
        assert!(order_ratio_ok(ev.group().unwrap(), evt.group().unwrap()));
    }

    #[test]
    fn a_family_order_ratio_is_one_or_two() {
        // Guard replacing the ambiguous order bookkeeping: over the whole
        // parameter range the two evaluation cokernels differ by a factor
        // of at most two.
        for n in 2..=12i64 {
            for s in (1..=n).filter(|s| n % s == 0) {
                for r in (1..=s).filter(|r| s % r == 0) {
                    for delta in 0..s {
                        let p = FamilyParams::A { n, r, s, delta };
                        let ev = oracle(&p, Quantity::CokerEv).unwrap();
                        let evt = oracle(&p, Quantity::CokerEvTilde).unwrap();
                        assert!(
                            order_ratio_ok(ev.group().unwrap(), evt.group().unwrap()),
                            "n={} r={} s={} delta={}",
                            n,
                            r,
                            s,
                            delta
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn torus_formulas() {
        // Gm, g=3, d=0 -> omega cokernel Z/gcd(4, -2) = Z/2, boundary Z/2.
        let p = FamilyParams::Torus { dim: 1, div: 0, g: 3 };
        assert_eq!(
            oracle(&p, Quantity::TorusCokerOmega).unwrap().group().unwrap().to_string(),
            "Z/2"
        );
        assert_eq!(
            oracle(&p, Quantity::TorusCokerGammaBar).unwrap().group().unwrap().to_string(),
            "Z/2"
        );
        // Genus one, nonzero class: free boundary image.
        let p = FamilyParams::Torus { dim: 2, div: 2, g: 1 };
        let g = oracle(&p, Quantity::TorusCokerGammaBar).unwrap();
        assert_eq!(g.group().unwrap().free_rank(), 2);
    }

    #[test]
    fn weyl_brute_force_matches_frozen_grams() {
        use crate::rootdata::simple_factor_table;
        for tag in [
            TypeTag::A(1),
            TypeTag::A(2),
            TypeTag::A(3),
            TypeTag::B(2),
            TypeTag::B(3),
            TypeTag::C(2),
            TypeTag::C(3),
            TypeTag::G2,
        ] {
            let brute = bruteforce_invariant_forms(tag).unwrap();
            let frozen = simple_factor_table(tag).unwrap().basic_gram;
            assert_eq!(brute, frozen, "basic Gram mismatch for {}", tag);
        }
        assert_eq!(weyl_order(TypeTag::G2).unwrap(), 12);
        assert_eq!(weyl_order(TypeTag::B(2)).unwrap(), 8);
        assert_eq!(weyl_order(TypeTag::A(2)).unwrap(), 6);
        assert_eq!(weyl_order(TypeTag::B(3)).unwrap(), 48);
        assert!(bruteforce_invariant_forms(TypeTag::E6).is_err());
    }
}
