//! Per-type data for the nine simple types: Cartan matrices, fundamental
//! coweights, the basic (minimal even Weyl-invariant) form on the coroot
//! lattice, and the coweight/coroot quotient.
//!
//! Coordinates: the coroot space of a factor of rank l is Q^l with basis the
//! simple coroots. Cartan matrices follow the usual convention
//! C[i][j] = <alpha_i, alpha_j^vee>, so the matrix of the simple reflection
//! s_i on coroot coordinates is I - e_i * (row i of C).

use crate::error::{Error, Result};
use crate::exactalg::num::{int, Int, Rat};
use crate::exactalg::{quotient_group, FgAbGroup, Lattice, MatQ, MatZ};
use num::Signed;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum TypeTag {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl TypeTag {
    pub fn rank(&self) -> usize {
        match *self {
            TypeTag::A(l) | TypeTag::B(l) | TypeTag::C(l) | TypeTag::D(l) => l,
            TypeTag::E6 => 6,
            TypeTag::E7 => 7,
            TypeTag::E8 => 8,
            TypeTag::F4 => 4,
            TypeTag::G2 => 2,
        }
    }

    pub fn parse(s: &str) -> Result<TypeTag> {
        let bad = || Error::UnsupportedType(s.to_string());
        let (letter, rank) = match s.find(':') {
            Some(i) => (&s[..i], Some(s[i + 1..].parse::<usize>().map_err(|_| bad())?)),
            None => {
                if s.len() >= 2 && s.as_bytes()[0].is_ascii_alphabetic() {
                    let (l, r) = s.split_at(1);
                    (l, r.parse::<usize>().ok())
                } else {
                    (s, None)
                }
            }
        };
        match (letter, rank) {
            ("A" | "a", Some(l)) if l >= 1 => Ok(TypeTag::A(l)),
            ("B" | "b", Some(l)) if l >= 2 => Ok(TypeTag::B(l)),
            ("C" | "c", Some(l)) if l >= 2 => Ok(TypeTag::C(l)),
            ("D" | "d", Some(l)) if l >= 3 => Ok(TypeTag::D(l)),
            ("E" | "e", Some(6)) => Ok(TypeTag::E6),
            ("E" | "e", Some(7)) => Ok(TypeTag::E7),
            ("E" | "e", Some(8)) => Ok(TypeTag::E8),
            ("F" | "f", Some(4)) => Ok(TypeTag::F4),
            ("G" | "g", Some(2)) => Ok(TypeTag::G2),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TypeTag::A(l) => write!(f, "A{}", l),
            TypeTag::B(l) => write!(f, "B{}", l),
            TypeTag::C(l) => write!(f, "C{}", l),
            TypeTag::D(l) => write!(f, "D{}", l),
            TypeTag::E6 => write!(f, "E6"),
            TypeTag::E7 => write!(f, "E7"),
            TypeTag::E8 => write!(f, "E8"),
            TypeTag::F4 => write!(f, "F4"),
            TypeTag::G2 => write!(f, "G2"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SimpleFactor {
    pub tag: TypeTag,
    pub rank: usize,
    pub cartan: MatZ,
    /// Column i is the fundamental coweight w_i^vee in coroot coordinates
    /// (the inverse of the Cartan matrix).
    pub coweights: MatQ,
    /// Gram matrix of the basic form on the simple-coroot basis: the
    /// generator of the rank-one lattice of even W-invariant integral
    /// symmetric forms on the coroot lattice.
    pub basic_gram: MatZ,
    /// Invariant factors of coweights/coroots.
    pub fund_group: FgAbGroup,
}

impl SimpleFactor {
    /// The coroot lattice Z^rank in factor coordinates.
    pub fn coroot_lattice(&self) -> Lattice {
        Lattice::standard(self.rank)
    }

    /// The coweight lattice in factor coordinates.
    pub fn coweight_lattice(&self) -> Lattice {
        Lattice::from_generators(self.rank, &self.coweights)
    }

    /// Fundamental coweight w_i^vee (1-based index) in factor coordinates.
    pub fn coweight(&self, i: usize) -> Vec<Rat> {
        assert!(1 <= i && i <= self.rank);
        self.coweights.col(i - 1)
    }

    /// Matrix of the simple reflection s_i (1-based) on coroot coordinates.
    pub fn reflection(&self, i: usize) -> MatQ {
        assert!(1 <= i && i <= self.rank);
        let mut m = MatQ::identity(self.rank);
        for j in 0..self.rank {
            let c = crate::exactalg::num::rat_of(&self.cartan[(i - 1, j)]);
            m[(i - 1, j)] -= c;
        }
        m
    }
}

/// Builds the table for one simple type.
pub fn simple_factor_table(tag: TypeTag) -> Result<SimpleFactor> {
    let l = tag.rank();
    let cartan = cartan_matrix(tag)?;
    let coweights = cartan
        .to_q()
        .inverse()
        .ok_or_else(|| Error::UnsupportedType(format!("singular Cartan matrix for {}", tag)))?;
    let basic_gram = basic_gram(tag, &cartan);
    let coroots = Lattice::standard(l);
    let coweight_lat = Lattice::from_generators(l, &coweights);
    let fund_group = quotient_group(&coweight_lat, &coroots)?;
    let table = SimpleFactor { tag, rank: l, cartan, coweights, basic_gram, fund_group };
    check_table(&table)?;
    Ok(table)
}

fn cartan_matrix(tag: TypeTag) -> Result<MatZ> {
    fn edge(c: &mut MatZ, i: usize, j: usize) {
        c[(i, j)] = int(-1);
        c[(j, i)] = int(-1);
    }
    let l = tag.rank();
    let mut c = MatZ::zeros(l, l);
    for i in 0..l {
        c[(i, i)] = int(2);
    }
    match tag {
        TypeTag::A(_) => {
            for i in 1..l {
                edge(&mut c, i - 1, i);
            }
        }
        TypeTag::B(_) => {
            for i in 1..l {
                edge(&mut c, i - 1, i);
            }
            c[(l - 2, l - 1)] = int(-2); // alpha_l is the short root
        }
        TypeTag::C(_) => {
            for i in 1..l {
                edge(&mut c, i - 1, i);
            }
            c[(l - 1, l - 2)] = int(-2); // alpha_l is the long root
        }
        TypeTag::D(_) => {
            for i in 1..l - 1 {
                edge(&mut c, i - 1, i);
            }
            edge(&mut c, l - 3, l - 1);
        }
        TypeTag::E6 | TypeTag::E7 | TypeTag::E8 => {
            // Bourbaki numbering: chain 1-3-4-5-6(-7)(-8), node 2 on node 4.
            edge(&mut c, 0, 2);
            for i in 3..l {
                edge(&mut c, i - 1, i);
            }
            edge(&mut c, 1, 3);
        }
        TypeTag::F4 => {
            edge(&mut c, 0, 1);
            edge(&mut c, 2, 3);
            c[(1, 2)] = int(-2);
            c[(2, 1)] = int(-1);
        }
        TypeTag::G2 => {
            c[(0, 1)] = int(-1);
            c[(1, 0)] = int(-3);
        }
    }
    Ok(c)
}

/// Squared lengths of the simple coroots under the basic form. For
/// simply-laced types all are 2; short roots give long coroots.
fn coroot_norms(tag: TypeTag) -> Vec<i64> {
    let l = tag.rank();
    match tag {
        TypeTag::A(_) | TypeTag::D(_) | TypeTag::E6 | TypeTag::E7 | TypeTag::E8 => vec![2; l],
        TypeTag::B(_) => {
            let mut v = vec![2; l];
            v[l - 1] = 4;
            v
        }
        TypeTag::C(_) => {
            let mut v = vec![4; l];
            v[l - 1] = 2;
            v
        }
        TypeTag::F4 => vec![2, 2, 4, 4],
        TypeTag::G2 => vec![6, 2],
    }
}

/// basic(a_i^vee, a_j^vee) = C[i][j] * norm_i / 2.
fn basic_gram(tag: TypeTag, cartan: &MatZ) -> MatZ {
    let l = tag.rank();
    let norms = coroot_norms(tag);
    let mut b = MatZ::zeros(l, l);
    for i in 0..l {
        for j in 0..l {
            let v = &cartan[(i, j)] * int(norms[i] / 2);
            b[(i, j)] = v;
        }
    }
    b
}

fn check_table(t: &SimpleFactor) -> Result<()> {
    // Gram symmetric, positive definite, with even diagonal.
    if !t.basic_gram.to_q().is_symmetric() {
        return Err(Error::InvalidDatum(format!("basic Gram of {} is not symmetric", t.tag)));
    }
    for n in 1..=t.rank {
        let mut minor = MatQ::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                minor[(i, j)] = crate::exactalg::num::rat_of(&t.basic_gram[(i, j)]);
            }
        }
        if minor.det() <= crate::exactalg::num::rat(0) {
            return Err(Error::InvalidDatum(format!(
                "basic Gram of {} is not positive definite",
                t.tag
            )));
        }
    }
    for i in 0..t.rank {
        if (&t.basic_gram[(i, i)] % int(2)) != int(0) {
            return Err(Error::InvalidDatum(format!("basic Gram of {} has odd diagonal", t.tag)));
        }
    }
    // |coweights/coroots| = det(Cartan).
    let det = t.cartan.to_q().det();
    let order = t.fund_group.order().ok_or_else(|| {
        Error::InvalidDatum(format!("coweight/coroot quotient of {} is infinite", t.tag))
    })?;
    if crate::exactalg::num::rat_of(&order) != det.abs() {
        return Err(Error::InvalidDatum(format!(
            "fundamental group order of {} does not match the Cartan determinant",
            t.tag
        )));
    }
    // Invariance under every simple reflection.
    let bq = t.basic_gram.to_q();
    for i in 1..=t.rank {
        let s = t.reflection(i);
        if s.transpose().mul(&bq).mul(&s) != bq {
            return Err(Error::InvalidDatum(format!(
                "basic Gram of {} is not reflection-invariant",
                t.tag
            )));
        }
    }
    Ok(())
}

/// Expected coweight/coroot quotient per type, used as a cross-check.
pub fn expected_fund_group(tag: TypeTag) -> FgAbGroup {
    match tag {
        TypeTag::A(l) => FgAbGroup::from_orders(&[Int::from(l as i64 + 1)]),
        TypeTag::B(_) | TypeTag::C(_) | TypeTag::E7 => FgAbGroup::from_orders(&[int(2)]),
        TypeTag::D(l) => {
            if l % 2 == 0 {
                FgAbGroup::from_orders(&[int(2), int(2)])
            } else {
                FgAbGroup::from_orders(&[int(4)])
            }
        }
        TypeTag::E6 => FgAbGroup::from_orders(&[int(3)]),
        TypeTag::E8 | TypeTag::F4 | TypeTag::G2 => FgAbGroup::trivial(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ALL: &[TypeTag] = &[
        TypeTag::A(1),
        TypeTag::A(2),
        TypeTag::A(3),
        TypeTag::A(7),
        TypeTag::B(2),
        TypeTag::B(3),
        TypeTag::B(5),
        TypeTag::C(2),
        TypeTag::C(3),
        TypeTag::C(6),
        TypeTag::D(3),
        TypeTag::D(4),
        TypeTag::D(5),
        TypeTag::D(8),
        TypeTag::E6,
        TypeTag::E7,
        TypeTag::E8,
        TypeTag::F4,
        TypeTag::G2,
    ];

    #[test]
    fn tables_satisfy_invariants() {
        for &tag in ALL {
            let t = simple_factor_table(tag).unwrap();
            assert_eq!(t.fund_group, expected_fund_group(tag), "fund group of {}", tag);
        }
    }

    #[test]
    fn named_examples() {
        let a1 = simple_factor_table(TypeTag::A(1)).unwrap();
        assert_eq!(a1.cartan, MatZ::from_rows(&[vec![2]]));
        assert_eq!(a1.basic_gram, MatZ::from_rows(&[vec![2]]));
        assert_eq!(a1.fund_group.to_string(), "Z/2");

        let d4 = simple_factor_table(TypeTag::D(4)).unwrap();
        assert_eq!(d4.fund_group.to_string(), "Z/2 x Z/2");

        let g2 = simple_factor_table(TypeTag::G2).unwrap();
        assert!(g2.fund_group.is_trivial());
        assert_eq!(g2.basic_gram, MatZ::from_rows(&[vec![6, -3], vec![-3, 2]]));
    }

    #[test]
    fn minimality_of_basic_gram_via_reflection_solve() {
        // The basic Gram must generate the lattice of reflection-invariant
        // integral symmetric forms with even diagonal on the coroot lattice.
        use crate::exactalg::num::{rat, rat_of};
        use crate::exactalg::{congruence_lattice, Congruence};
        for &tag in ALL {
            let t = simple_factor_table(tag).unwrap();
            let l = t.rank;
            let dim = l * (l + 1) / 2;
            // Invariance is linear in the form; solve over Q.
            let idx = |i: usize, j: usize| {
                let (i, j) = if i <= j { (i, j) } else { (j, i) };
                (0..i).map(|r| l - r).sum::<usize>() + (j - i)
            };
            let mut rows: Vec<Vec<Rat>> = Vec::new();
            for r in 1..=l {
                let s = t.reflection(r);
                // (S^T X S - X)[p][q] = 0 for all p <= q.
                for p in 0..l {
                    for q in p..l {
                        let mut row = vec![rat(0); dim];
                        for a in 0..l {
                            for b in 0..l {
                                // coefficient of X[a][b] in (S^T X S)[p][q]
                                let c = &s[(a, p)] * &s[(b, q)];
                                row[idx(a, b)] += c;
                            }
                        }
                        row[idx(p, q)] -= rat(1);
                        rows.push(row);
                    }
                }
            }
            let sys = MatQ::from_rows(&rows);
            let ker = sys.kernel();
            assert_eq!(ker.cols(), 1, "invariant forms of {} not rank one", tag);
            // Congruence-solve integrality + evenness inside the invariant line.
            let mut dir = ker.col(0);
            if dir[idx(0, 0)] < rat(0) {
                for x in &mut dir {
                    *x = -x.clone();
                }
            }
            let mut conds = Vec::new();
            for p in 0..l {
                for q in p..l {
                    let coeff = vec![dir[idx(p, q)].clone()];
                    if p == q {
                        conds.push(Congruence::even(coeff));
                    } else {
                        conds.push(Congruence::integral(coeff));
                    }
                }
            }
            let lat = congruence_lattice(1, &conds);
            assert_eq!(lat.rank(), 1);
            let gen = lat.basis().col(0)[0].clone();
            for p in 0..l {
                for q in 0..l {
                    assert_eq!(
                        &gen * &dir[idx(p, q)],
                        rat_of(&t.basic_gram[(p, q)]),
                        "basic Gram mismatch for {} at ({},{})",
                        tag,
                        p,
                        q
                    );
                }
            }
        }
    }
}
