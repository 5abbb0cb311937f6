//! Component classes of the moduli stack: elements of pi_1(G) handled
//! through explicit lifts in the cocharacter lattice.

use super::datum::{Parts, ReductiveDatum};
use crate::error::{Error, Result};
use crate::exactalg::num::{gcd_all, Int, Rat};
use num::Zero;

/// A class in pi_1(G), carried by a lift in the cocharacter lattice. Two
/// lifts differing by a coroot sum produce identical derived data.
#[derive(Clone, Debug)]
pub struct Pi1Element {
    pub lift: Vec<Rat>,
    /// Canonical coordinates in pi_1(G).
    pub pi1_class: Vec<Int>,
    /// Canonical coordinates of the image in pi_1(G^ss).
    pub ss_class: Vec<Int>,
    /// The image in Lambda(G^ab): abelian-block coordinates of the lift.
    pub ab: Vec<Rat>,
    /// Coordinates of the image in the canonical basis of Lambda(G^ab).
    pub ab_coords: Vec<Int>,
    /// Order in pi_1(G); zero means infinite order.
    pub order: Int,
    /// Divisibility of the image in Lambda(G^ab) (zero when that image is 0).
    pub div_ab: Int,
}

impl Pi1Element {
    pub fn ss_is_zero(&self) -> bool {
        self.ss_class.iter().all(|c| c.is_zero())
    }

    pub fn ab_is_zero(&self) -> bool {
        self.ab.iter().all(|c| c.is_zero())
    }

    /// The semisimple part of the lift as an ambient vector (a lift of the
    /// image class in pi_1(G^ss)).
    pub fn ss_lift(&self, datum: &ReductiveDatum) -> Vec<Rat> {
        datum.ss_part(&self.lift)
    }
}

/// Classifies a lift vector.
pub fn pi1_class(datum: &ReductiveDatum, parts: &Parts, lift: &[Rat]) -> Result<Pi1Element> {
    if lift.len() != parts.ambient || !datum.cochar.contains(lift) {
        return Err(Error::NotInLattice);
    }
    let pi1_class = parts.pi1.class(lift)?;
    let ss_lift = datum.ss_part(lift);
    let ss_class = parts.pi1_ss.class(&ss_lift)?;
    let ab = datum.p_ab(lift);
    let ab_coords_q = if parts.ab_dim == 0 {
        vec![]
    } else {
        parts.ab_coords(&ab).ok_or(Error::NotInLattice)?
    };
    let mut ab_coords = Vec::with_capacity(ab_coords_q.len());
    for c in &ab_coords_q {
        ab_coords
            .push(crate::exactalg::num::to_int(c).ok_or(Error::NotInLattice)?);
    }
    let order = parts.pi1.class_order(lift)?;
    let div_ab = gcd_all(&ab_coords);
    Ok(Pi1Element { lift: lift.to_vec(), pi1_class, ss_class, ab, ab_coords, order, div_ab })
}

/// The zero class.
pub fn pi1_zero(datum: &ReductiveDatum, parts: &Parts) -> Pi1Element {
    let lift = vec![Rat::zero(); parts.ambient];
    pi1_class(datum, parts, &lift).expect("zero lift")
}

/// All torsion classes of pi_1(G), via canonical representatives. For a
/// semisimple datum this is all of pi_1(G).
pub fn pi1_torsion_elements(datum: &ReductiveDatum, parts: &Parts) -> Vec<Pi1Element> {
    parts
        .pi1
        .torsion_classes()
        .into_iter()
        .map(|c| {
            let lift = parts.pi1.representative(&c);
            pi1_class(datum, parts, &lift).expect("representative lift")
        })
        .collect()
}
