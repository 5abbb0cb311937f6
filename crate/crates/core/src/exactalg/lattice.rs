//! Lattices inside a fixed rational ambient space, represented by a canonical
//! generator matrix (column Hermite form over a cleared common denominator).
//! Two values are equal iff their canonical matrices agree.

use super::mat::{MatQ, MatZ};
use super::num::{is_int, rat_of, Int, Rat};
use crate::error::{Error, Result};
use num::{Integer, One, Zero};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Lattice {
    ambient: usize,
    basis: MatQ, // ambient x rank, canonical
}

impl Lattice {
    /// Builds a lattice from generators (columns); dependent generators are
    /// allowed and removed by canonicalization.
    pub fn from_generators(ambient: usize, gens: &MatQ) -> Lattice {
        assert_eq!(gens.rows(), ambient);
        Lattice { ambient, basis: canonical_basis(gens) }
    }

    pub fn from_cols(ambient: usize, cols: &[Vec<Rat>]) -> Lattice {
        Self::from_generators(ambient, &MatQ::from_cols(ambient, cols))
    }

    /// The zero lattice.
    pub fn zero(ambient: usize) -> Lattice {
        Lattice { ambient, basis: MatQ::zeros(ambient, 0) }
    }

    /// The standard lattice Z^m.
    pub fn standard(ambient: usize) -> Lattice {
        Lattice { ambient, basis: MatQ::identity(ambient) }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &MatQ {
        &self.basis
    }

    pub fn basis_cols(&self) -> Vec<Vec<Rat>> {
        self.basis.cols_vec()
    }

    /// Coordinates of v in the basis, if v lies in the lattice.
    pub fn coords(&self, v: &[Rat]) -> Option<Vec<Int>> {
        assert_eq!(v.len(), self.ambient);
        if self.rank() == 0 {
            return if v.iter().all(|x| x.is_zero()) { Some(vec![]) } else { None };
        }
        let c = self.basis.solve(v)?;
        let mut out = Vec::with_capacity(c.len());
        for x in &c {
            if !is_int(x) {
                return None;
            }
            out.push(x.numer().clone());
        }
        Some(out)
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.coords(v).is_some()
    }

    pub fn is_sublattice_of(&self, other: &Lattice) -> bool {
        self.ambient == other.ambient
            && self.basis.cols_vec().iter().all(|c| other.contains(c))
    }

    fn check_ambient(&self, other: &Lattice) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        Ok(())
    }

    /// Lattice sum (join): the lattice generated by both sets of generators.
    pub fn sum(&self, other: &Lattice) -> Result<Lattice> {
        self.check_ambient(other)?;
        Ok(Lattice::from_generators(self.ambient, &self.basis.hstack(&other.basis)))
    }

    /// Lattice intersection (meet).
    pub fn intersect(&self, other: &Lattice) -> Result<Lattice> {
        self.check_ambient(other)?;
        if self.rank() == 0 || other.rank() == 0 {
            return Ok(Lattice::zero(self.ambient));
        }
        // Solve B1 a = B2 b over the integers after clearing denominators.
        let stacked = self.basis.hstack(&other.basis.scale(&-Rat::one()));
        let (m, _) = stacked.clear_denominators();
        let k = m.kernel();
        let mut gens = MatQ::zeros(self.ambient, k.cols());
        for j in 0..k.cols() {
            for i in 0..self.ambient {
                let mut acc = Rat::zero();
                for t in 0..self.rank() {
                    acc += &self.basis[(i, t)] * rat_of(&k[(t, j)]);
                }
                gens[(i, j)] = acc;
            }
        }
        Ok(Lattice::from_generators(self.ambient, &gens))
    }

    /// The sublattice of vectors lying in the rational span of `subspace`
    /// (columns spanning the subspace).
    pub fn saturate(&self, subspace: &MatQ) -> Result<Lattice> {
        assert_eq!(subspace.rows(), self.ambient);
        if self.rank() == 0 {
            return Ok(Lattice::zero(self.ambient));
        }
        // Normal vectors to the subspace: kernel of subspace^T.
        let normals = subspace.transpose().kernel(); // ambient x q
        let t = normals.transpose().mul(&self.basis); // q x rank
        if t.rows() == 0 {
            return Ok(self.clone());
        }
        let (tz, _) = t.clear_denominators();
        let k = tz.kernel();
        let mut gens = MatQ::zeros(self.ambient, k.cols());
        for j in 0..k.cols() {
            for i in 0..self.ambient {
                let mut acc = Rat::zero();
                for s in 0..self.rank() {
                    acc += &self.basis[(i, s)] * rat_of(&k[(s, j)]);
                }
                gens[(i, j)] = acc;
            }
        }
        Ok(Lattice::from_generators(self.ambient, &gens))
    }

    /// Dual lattice with respect to a symmetric non-degenerate pairing:
    /// {v in span(self) : <v, x> in Z for all x in self}.
    pub fn dual(&self, pairing: &MatQ) -> Result<Lattice> {
        assert_eq!(pairing.rows(), self.ambient);
        assert_eq!(pairing.cols(), self.ambient);
        if self.rank() == 0 {
            return Ok(Lattice::zero(self.ambient));
        }
        let gram = self.basis.transpose().mul(&pairing.mul(&self.basis));
        let inv = gram.inverse().ok_or(Error::DegeneratePairing)?;
        Ok(Lattice::from_generators(self.ambient, &self.basis.mul(&inv)))
    }

    /// Dual with respect to the standard dot pairing of the ambient.
    pub fn dual_std(&self) -> Result<Lattice> {
        self.dual(&MatQ::identity(self.ambient))
    }

    /// Image of the lattice under a linear map (rows x ambient matrix).
    pub fn map(&self, f: &MatQ) -> Lattice {
        assert_eq!(f.cols(), self.ambient);
        Lattice::from_generators(f.rows(), &f.mul(&self.basis))
    }

    /// Scales every generator.
    pub fn scaled(&self, c: &Rat) -> Lattice {
        assert!(!c.is_zero());
        Lattice::from_generators(self.ambient, &self.basis.scale(c))
    }
}

/// Canonical basis: clear denominators, take the column Hermite form of the
/// integer matrix (dropping dependent columns), scale back, reduce.
fn canonical_basis(gens: &MatQ) -> MatQ {
    let (z, d) = gens.clear_denominators();
    let h = z.transpose().row_hnf().transpose();
    let dinv = Rat::new(Int::one(), d);
    h.to_q().scale(&dinv)
}

/// Invariant factors of big/small, zeros marking free rank; requires
/// small to be a sublattice of big.
pub fn quotient_group(big: &Lattice, small: &Lattice) -> Result<super::fgab::FgAbGroup> {
    Ok(LatticeQuotient::new(big.clone(), small)?.group().clone())
}

/// A presentation of big/small able to compute the class of any element.
#[derive(Clone, Debug)]
pub struct LatticeQuotient {
    big: Lattice,
    u: MatZ,
    /// SNF diagonal of the relation matrix, padded with zeros to rank(big).
    factors: Vec<Int>,
    group: super::fgab::FgAbGroup,
}

impl LatticeQuotient {
    pub fn new(big: Lattice, small: &Lattice) -> Result<LatticeQuotient> {
        if big.ambient() != small.ambient() {
            return Err(Error::AmbientMismatch { left: big.ambient(), right: small.ambient() });
        }
        let r_big = big.rank();
        let mut rel = MatZ::zeros(r_big, small.rank());
        for (j, col) in small.basis_cols().iter().enumerate() {
            let c = big.coords(col).ok_or(Error::NotASublattice)?;
            for i in 0..r_big {
                rel[(i, j)] = c[i].clone();
            }
        }
        let snf = rel.snf();
        let mut factors = snf.diag.clone();
        factors.resize(r_big, Int::zero());
        let group = super::fgab::FgAbGroup::from_chain(&factors);
        Ok(LatticeQuotient { big, u: snf.u, factors, group })
    }

    pub fn group(&self) -> &super::fgab::FgAbGroup {
        &self.group
    }

    pub fn big(&self) -> &Lattice {
        &self.big
    }

    /// SNF diagonal of the relation matrix, padded with zeros to rank(big);
    /// coordinate i of a class lives in Z/factors[i] (Z when 0).
    pub fn factors(&self) -> &[Int] {
        &self.factors
    }

    /// An ambient vector whose class has the given canonical coordinates.
    pub fn representative(&self, class: &[Int]) -> Vec<Rat> {
        assert_eq!(class.len(), self.factors.len());
        let uq = self.u.to_q();
        let uinv = uq.inverse().expect("unimodular");
        let cq: Vec<Rat> = class.iter().map(rat_of).collect();
        let x = uinv.mul_vec(&cq);
        self.big.basis().mul_vec(&x)
    }

    /// Every torsion class, as canonical coordinate tuples (free coordinates
    /// zero). The count is the order of the torsion subgroup.
    pub fn torsion_classes(&self) -> Vec<Vec<Int>> {
        use num::ToPrimitive;
        let mut out: Vec<Vec<Int>> = vec![vec![Int::zero(); self.factors.len()]];
        for (i, d) in self.factors.iter().enumerate() {
            if d.is_zero() || d.is_one() {
                continue;
            }
            let dn = d.to_i64().expect("small torsion order");
            let mut next = Vec::new();
            for c in &out {
                for v in 0..dn {
                    let mut c2 = c.clone();
                    c2[i] = Int::from(v);
                    next.push(c2);
                }
            }
            out = next;
        }
        out
    }

    /// Canonical coordinates of the class of v: entry i lives in Z/factors[i]
    /// (in Z when factors[i] = 0). Errors if v is not in the big lattice.
    pub fn class(&self, v: &[Rat]) -> Result<Vec<Int>> {
        let x = self.big.coords(v).ok_or(Error::NotInBigLattice)?;
        let y = self.u.mul_vec(&x);
        Ok(y.iter()
            .zip(&self.factors)
            .map(|(c, d)| {
                if d.is_zero() {
                    c.clone()
                } else {
                    super::num::div_rem_euclid(c, d).1
                }
            })
            .collect())
    }

    pub fn class_is_zero(&self, v: &[Rat]) -> Result<bool> {
        Ok(self.class(v)?.iter().all(|c| c.is_zero()))
    }

    /// Order of the class of v (zero for infinite order).
    pub fn class_order(&self, v: &[Rat]) -> Result<Int> {
        let c = self.class(v)?;
        let mut ord = Int::one();
        for (x, d) in c.iter().zip(&self.factors) {
            if x.is_zero() {
                continue;
            }
            if d.is_zero() {
                return Ok(Int::zero());
            }
            let o = d / x.gcd(d);
            ord = super::num::lcm_int(&ord, &o);
        }
        Ok(ord)
    }

    /// The subgroup generated by the classes of `elements`, and the cokernel
    /// of that subgroup inside the quotient. For finite quotients the orders
    /// satisfy |subgroup| * |cokernel| = |quotient|.
    pub fn subgroup_cokernel(
        &self,
        small: &Lattice,
        elements: &[Vec<Rat>],
    ) -> Result<(super::fgab::FgAbGroup, super::fgab::FgAbGroup)> {
        for e in elements {
            if !self.big.contains(e) {
                return Err(Error::NotInBigLattice);
            }
        }
        let mut gens = small.basis().clone();
        if !elements.is_empty() {
            let cols: Vec<Vec<Rat>> = elements.to_vec();
            gens = gens.hstack(&MatQ::from_cols(self.big.ambient(), &cols));
        }
        let span = Lattice::from_generators(self.big.ambient(), &gens);
        let subgroup = quotient_group(&span, small)?;
        let cokernel = quotient_group(&self.big, &span)?;
        Ok((subgroup, cokernel))
    }
}

/// Spec-level helper: subgroup generated by element classes in big/small and
/// its cokernel.
pub fn image_in_finite_quotient(
    big: &Lattice,
    small: &Lattice,
    elements: &[Vec<Rat>],
) -> Result<(super::fgab::FgAbGroup, super::fgab::FgAbGroup)> {
    let q = LatticeQuotient::new(big.clone(), small)?;
    q.subgroup_cokernel(small, elements)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::num::{int, rat, ratio};

    fn zlat(cols: &[Vec<i64>]) -> Lattice {
        let cols: Vec<Vec<Rat>> =
            cols.iter().map(|c| c.iter().map(|&x| rat(x)).collect()).collect();
        Lattice::from_cols(cols[0].len(), &cols)
    }

    #[test]
    fn dual_of_standard_is_standard() {
        let l = Lattice::standard(2);
        assert_eq!(l.dual_std().unwrap(), l);
    }

    #[test]
    fn dual_scaling() {
        // 2Z in Q^1 dualizes to (1/2)Z.
        let l = zlat(&[vec![2]]);
        let d = l.dual_std().unwrap();
        assert!(d.contains(&[ratio(1, 2)]));
        assert!(!d.contains(&[ratio(1, 4)]));
        assert_eq!(d.dual_std().unwrap(), l);
    }

    #[test]
    fn dual_of_a1_coroot_with_gram() {
        // <a> with pairing (a,a) = 2 dualizes to <a/2>.
        let l = Lattice::standard(1);
        let pairing = MatQ::from_rows(&[vec![rat(2)]]);
        let d = l.dual(&pairing).unwrap();
        assert_eq!(d, zlat(&[vec![1]]).scaled(&ratio(1, 2)));
    }

    #[test]
    fn sum_and_intersect() {
        let a = zlat(&[vec![2, 0]]);
        let b = zlat(&[vec![0, 3]]);
        let s = a.sum(&b).unwrap();
        assert!(s.contains(&[rat(2), rat(3)]));
        assert_eq!(s.rank(), 2);
        let i = zlat(&[vec![2, 0], vec![1, 1]])
            .intersect(&zlat(&[vec![1, 0], vec![0, 2]]))
            .unwrap();
        // Vectors (x, y) with x+y even and y even: x, y both even.
        assert!(i.contains(&[rat(2), rat(0)]));
        assert!(i.contains(&[rat(0), rat(2)]));
        assert!(!i.contains(&[rat(1), rat(1)]));
        assert_eq!(i.rank(), 2);
        assert_eq!(Lattice::standard(2).intersect(&Lattice::standard(2)).unwrap(), Lattice::standard(2));
    }

    #[test]
    fn saturation() {
        let l = Lattice::standard(3);
        let sub = MatQ::from_cols(3, &[vec![rat(1), rat(1), rat(0)]]);
        let s = l.saturate(&sub).unwrap();
        assert_eq!(s.rank(), 1);
        assert!(s.contains(&[rat(1), rat(1), rat(0)]));
    }

    #[test]
    fn quotients() {
        // Z^2 / <(2,0),(0,4)> = Z/2 + Z/4
        let big = Lattice::standard(2);
        let small = zlat(&[vec![2, 0], vec![0, 4]]);
        let q = quotient_group(&big, &small).unwrap();
        assert_eq!(q.to_string(), "Z/2 x Z/4");
        // L / L trivial
        assert!(quotient_group(&big, &big).unwrap().is_trivial());
        // Free quotient
        let q = quotient_group(&big, &zlat(&[vec![2, 0]])).unwrap();
        assert_eq!(q.free_rank(), 1);
        assert_eq!(q.torsion_factors(), vec![int(2)]);
        // Not a sublattice
        assert!(quotient_group(&small, &big).is_err());
    }

    #[test]
    fn image_in_quotient() {
        // Z/4 from 4Z in Z, image of {2}: subgroup Z/2, cokernel Z/2.
        let big = Lattice::standard(1);
        let small = zlat(&[vec![4]]);
        let (sub, coker) = image_in_finite_quotient(&big, &small, &[vec![rat(2)]]).unwrap();
        assert_eq!(sub.to_string(), "Z/2");
        assert_eq!(coker.to_string(), "Z/2");
        // Empty image: cokernel is the whole quotient.
        let (sub, coker) = image_in_finite_quotient(&big, &small, &[]).unwrap();
        assert!(sub.is_trivial());
        assert_eq!(coker.to_string(), "Z/4");
        // (Z/2)^2, image of (1,1): cokernel Z/2 (checked exhaustively over the
        // four-element group: classes generated are (0,0) and (1,1)).
        let big = Lattice::standard(2);
        let small = zlat(&[vec![2, 0], vec![0, 2]]);
        let (sub, coker) =
            image_in_finite_quotient(&big, &small, &[vec![rat(1), rat(1)]]).unwrap();
        assert_eq!(sub.to_string(), "Z/2");
        assert_eq!(coker.to_string(), "Z/2");
    }

    #[test]
    fn canonical_equality() {
        let a = Lattice::from_cols(2, &[vec![rat(1), rat(1)], vec![rat(0), rat(2)]]);
        let b = Lattice::from_cols(2, &[vec![rat(1), rat(3)], vec![rat(1), rat(1)]]);
        assert_eq!(a, b);
    }
}
