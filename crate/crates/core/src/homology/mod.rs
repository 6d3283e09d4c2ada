//! Reduced simplicial homology over ℚ or GF(p).
//!
//! Ranks are computed exactly from signed boundary matrices; nothing here
//! touches floating point.

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

mod boundary;
pub mod rank;

pub use boundary::{boundary_matrix, BoundaryMatrix};

/// Coefficient field: characteristic 0 (ℚ) or a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    characteristic: u32,
}

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec { characteristic: 0 };

    /// GF(p); `p` must be a prime below 2^31.
    pub fn prime(p: u32) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::Usage(format!("{p} is not a supported prime")));
        }
        Ok(FieldSpec { characteristic: p })
    }

    /// `0` gives ℚ, anything else must be prime.
    pub fn from_characteristic(c: u32) -> Result<Self> {
        if c == 0 {
            Ok(Self::RATIONALS)
        } else {
            Self::prime(c)
        }
    }

    pub fn characteristic(self) -> u32 {
        self.characteristic
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        Self::RATIONALS
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => write!(f, "Q"),
            p => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(Self::RATIONALS);
        }
        let c: u32 = t
            .parse()
            .map_err(|_| Error::Usage(format!("invalid field {s:?}: expected 0, Q or a prime")))?;
        Self::from_characteristic(c)
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u32(self.characteristic)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut i = 2u64;
    while i * i <= p {
        if p.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

/// Reduced Betti numbers `b̃_i` for `i = -1, 0, 1, …`, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BettiVector {
    ranks: Vec<usize>,
}

impl BettiVector {
    pub fn from_ranks(mut ranks: Vec<usize>) -> Self {
        while ranks.len() > 1 && ranks.last() == Some(&0) {
            ranks.pop();
        }
        if ranks.is_empty() {
            ranks.push(0);
        }
        BettiVector { ranks }
    }

    /// `b̃_i`; zero outside the stored range.
    pub fn get(&self, i: isize) -> usize {
        if i < -1 {
            return 0;
        }
        self.ranks.get((i + 1) as usize).copied().unwrap_or(0)
    }

    /// Ranks starting at dimension −1.
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }

    /// Dimensions with nonzero homology, ascending.
    pub fn nonzero_degrees(&self) -> impl Iterator<Item = isize> + '_ {
        self.ranks
            .iter()
            .enumerate()
            .filter(|(_, &r)| r != 0)
            .map(|(i, _)| i as isize - 1)
    }

    /// Lowest dimension with nonzero homology.
    pub fn first_nonzero(&self) -> Option<isize> {
        self.ranks.iter().position(|&r| r != 0).map(|i| i as isize - 1)
    }

    /// `Σ_i (-1)^i b̃_i`, which must equal the reduced Euler characteristic.
    pub fn euler(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(idx, &r)| if idx % 2 == 1 { r as i64 } else { -(r as i64) })
            .sum()
    }
}

impl fmt::Debug for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Betti{:?}", self.ranks)
    }
}

impl Serialize for BettiVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.ranks.len()))?;
        for (idx, r) in self.ranks.iter().enumerate() {
            map.serialize_entry(&(idx as isize - 1).to_string(), r)?;
        }
        map.end()
    }
}

/// Reduced homology ranks of a nonvoid complex.
pub fn reduced_betti(c: &SimplicialComplex, field: FieldSpec) -> Result<BettiVector> {
    if c.is_void() {
        return Err(Error::domain("homology of the void complex"));
    }
    if !c.is_irrelevant() && c.core_vertices().len() < c.vertex_count() {
        // A cone point lies in every facet.
        return Ok(BettiVector::from_ranks(vec![0]));
    }
    boundary_betti(c, field)
}

/// Betti numbers straight from boundary-matrix ranks, without the cone shortcut
/// taken by [`reduced_betti`].
pub fn boundary_betti(c: &SimplicialComplex, field: FieldSpec) -> Result<BettiVector> {
    if c.is_void() {
        return Err(Error::domain("homology of the void complex"));
    }
    let top = c.dim();
    let counts = c.f_vector()?;
    // rank_of[k] = rank ∂_k for k = 0..=top; ∂_{-1} and ∂_{top+1} vanish.
    let mut rank_of = Vec::with_capacity((top + 1) as usize);
    for k in 0..=top {
        let m = boundary_matrix(c, k)?;
        rank_of.push(rank::rank(&m, field));
    }
    let rk = |k: isize| -> usize {
        if k < 0 || k > top {
            0
        } else {
            rank_of[k as usize]
        }
    };
    let ranks = (-1..=top)
        .map(|i| counts.get(i) as usize - rk(i) - rk(i + 1))
        .collect();
    Ok(BettiVector::from_ranks(ranks))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(faces: &[&str]) -> SimplicialComplex {
        SimplicialComplex::from_facets(faces.iter().map(|f| f.split_whitespace())).unwrap()
    }

    fn fields() -> [FieldSpec; 3] {
        [
            FieldSpec::RATIONALS,
            FieldSpec::prime(2).unwrap(),
            FieldSpec::prime(3).unwrap(),
        ]
    }

    #[test]
    fn field_parsing() {
        assert_eq!("0".parse::<FieldSpec>().unwrap(), FieldSpec::RATIONALS);
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::RATIONALS);
        assert_eq!("7".parse::<FieldSpec>().unwrap().characteristic(), 7);
        assert!("4".parse::<FieldSpec>().is_err());
        assert!("1".parse::<FieldSpec>().is_err());
        assert!("x".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::prime(5).unwrap().to_string(), "GF(5)");
    }

    #[test]
    fn simplex_is_acyclic() {
        for f in fields() {
            assert!(reduced_betti(&SimplicialComplex::simplex(4), f).unwrap().is_acyclic());
        }
    }

    #[test]
    fn hollow_triangle_has_a_loop() {
        let c = cx(&["1 2", "1 3", "2 3"]);
        for f in fields() {
            let b = reduced_betti(&c, f).unwrap();
            assert_eq!(b.ranks(), &[0, 0, 1]);
        }
    }

    #[test]
    fn irrelevant_complex() {
        let b = reduced_betti(&SimplicialComplex::irrelevant(), FieldSpec::RATIONALS).unwrap();
        assert_eq!(b.ranks(), &[1]);
        assert_eq!(b.get(-1), 1);
        assert!(reduced_betti(&SimplicialComplex::void(), FieldSpec::RATIONALS).is_err());
    }

    #[test]
    fn disconnected_points() {
        let c = cx(&["a", "b", "c"]);
        assert_eq!(reduced_betti(&c, FieldSpec::RATIONALS).unwrap().ranks(), &[0, 2]);
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // Six-vertex triangulation of RP^2.
        let rp2 = cx(&[
            "1 2 3", "1 3 4", "1 4 5", "1 5 6", "1 2 6", "2 3 5", "2 4 5", "2 4 6", "3 4 6", "3 5 6",
        ]);
        let q = reduced_betti(&rp2, FieldSpec::RATIONALS).unwrap();
        assert!(q.is_acyclic());
        let gf2 = reduced_betti(&rp2, FieldSpec::prime(2).unwrap()).unwrap();
        assert_eq!(gf2.ranks(), &[0, 0, 1, 1]);
        assert_eq!(q.euler(), rp2.reduced_euler().unwrap());
        assert_eq!(gf2.euler(), rp2.reduced_euler().unwrap());
    }

    #[test]
    fn delta2_has_one_dimensional_homology() {
        let d2 = cx(&["4 5 6", "3 5 6", "2 3 5", "2 3 4", "1 3 4", "2 4 6"]);
        for f in fields() {
            let b = reduced_betti(&d2, f).unwrap();
            assert_eq!(b.get(0), 0);
            assert_eq!(b.get(1), 1 + b.get(2));
            assert_eq!(b.euler(), -1);
        }
    }
}
