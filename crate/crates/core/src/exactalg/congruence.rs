//! Solves systems of homogeneous congruences ℓ(p) ∈ c·Z on a rational
//! parameter space.

use super::lattice::Lattice;
use super::mat::MatQ;
use super::num::Rat;
use num::Zero;

/// One condition ℓ(p) ∈ modulus · Z.
#[derive(Clone, Debug)]
pub struct Congruence {
    pub form: Vec<Rat>,
    pub modulus: Rat,
}

impl Congruence {
    pub fn integral(form: Vec<Rat>) -> Self {
        Congruence { form, modulus: super::num::rat(1) }
    }

    pub fn even(form: Vec<Rat>) -> Self {
        Congruence { form, modulus: super::num::rat(2) }
    }
}

/// The solution lattice of the given congruences on Q^dim.
///
/// When the condition forms span the full dual space the solution set
/// {p in Q^dim : all conditions hold} is itself a lattice and is returned
/// exactly. Otherwise the solutions form no lattice (whole lines satisfy all
/// conditions), and the integer points are returned instead; this matches
/// how underdetermined congruence systems are used here (integer coefficient
/// vectors subject to congruences).
pub fn congruence_lattice(dim: usize, conds: &[Congruence]) -> Lattice {
    let active: Vec<&Congruence> = conds.iter().filter(|c| !c.form.iter().all(|x| x.is_zero())).collect();
    if active.is_empty() {
        return Lattice::standard(dim);
    }
    // Normalized condition matrix: row j is form_j / modulus_j, so the
    // conditions read A p ∈ Z^t.
    let mut a = MatQ::zeros(active.len(), dim);
    for (j, c) in active.iter().enumerate() {
        assert_eq!(c.form.len(), dim);
        assert!(!c.modulus.is_zero());
        for i in 0..dim {
            a[(j, i)] = &c.form[i] / &c.modulus;
        }
    }
    // {p : A p ∈ Z^t} is the dual (standard pairing) of the lattice spanned
    // by the rows of A; adjoining Z^dim to that row lattice restricts the
    // solutions to integer points when the rows do not span.
    let mut row_lattice = Lattice::from_generators(dim, &a.transpose());
    if row_lattice.rank() < dim {
        row_lattice = row_lattice.sum(&Lattice::standard(dim)).expect("same ambient");
    }
    row_lattice.dual_std().expect("full-rank row lattice")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::num::{rat, ratio};

    #[test]
    fn single_scaling_condition() {
        // p/2 in Z -> 2Z
        let l = congruence_lattice(1, &[Congruence::integral(vec![ratio(1, 2)])]);
        assert!(l.contains(&[rat(2)]));
        assert!(!l.contains(&[rat(1)]));
    }

    #[test]
    fn lcm_of_denominators() {
        // p/2 in Z and 3p/4 in Z -> 4Z (hand check: lcm of denominators after
        // reduction; 3p ≡ 0 mod 4 forces 4 | p).
        let l = congruence_lattice(
            1,
            &[
                Congruence::integral(vec![ratio(1, 2)]),
                Congruence::integral(vec![ratio(3, 4)]),
            ],
        );
        assert!(l.contains(&[rat(4)]));
        assert!(!l.contains(&[rat(2)]));
    }

    #[test]
    fn underdetermined_parity_condition() {
        // p1/2 + p2/2 in Z over integer points -> <(2,0),(1,1)>
        // (enumerating residues mod 2: p1 ≡ p2).
        let l = congruence_lattice(
            2,
            &[Congruence::integral(vec![ratio(1, 2), ratio(1, 2)])],
        );
        let expect = Lattice::from_cols(2, &[vec![rat(2), rat(0)], vec![rat(1), rat(1)]]);
        assert_eq!(l, expect);
    }

    #[test]
    fn modulus_two() {
        // 2p even is no condition on integers; p even is.
        let l = congruence_lattice(1, &[Congruence::even(vec![rat(1)])]);
        assert!(l.contains(&[rat(2)]) && !l.contains(&[rat(1)]));
    }

    #[test]
    fn brute_force_residue_check() {
        // Verified by brute force over residues modulo the lcm of the
        // condition denominators, for small dimensions.
        use num::ToPrimitive;
        let conds = vec![
            Congruence::integral(vec![ratio(1, 2), ratio(1, 3)]),
            Congruence::even(vec![rat(1), rat(1)]),
        ];
        let l = congruence_lattice(2, &conds);
        for x in -6i64..=6 {
            for y in -6i64..=6 {
                let p = [rat(x), rat(y)];
                let holds = conds.iter().all(|c| {
                    let v: Rat = c.form.iter().zip(&p).map(|(a, b)| a * b).sum();
                    (v / &c.modulus).denom().to_i64() == Some(1)
                });
                assert_eq!(l.contains(&p), holds, "at ({}, {})", x, y);
            }
        }
    }
}
