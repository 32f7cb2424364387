//! Core domain types shared across the crate.

use num_rational::Rational64;
use std::fmt;

pub type Rat = Rational64;

/// The nine families of simple Lie algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieFamily {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for LieFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            LieFamily::A => 'A',
            LieFamily::B => 'B',
            LieFamily::C => 'C',
            LieFamily::D => 'D',
            LieFamily::E => 'E',
            LieFamily::F => 'F',
            LieFamily::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// A simple Lie type, e.g. `B2` or `E7`.
///
/// Rank conventions: `A_r` needs `r >= 1`, `B_r`/`C_r` need `r >= 2` and
/// `D_r` needs `r >= 3`, so that low-rank aliases (`B1 = C1 = A1`,
/// `D2 = A1 x A1`, `D1`) never appear twice under different names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LieType {
    pub family: LieFamily,
    pub rank: usize,
}

impl LieType {
    pub fn new(family: LieFamily, rank: usize) -> Result<Self, LieError> {
        let ok = match family {
            LieFamily::A => rank >= 1,
            LieFamily::B | LieFamily::C => rank >= 2,
            LieFamily::D => rank >= 3,
            LieFamily::E => (6..=8).contains(&rank),
            LieFamily::F => rank == 4,
            LieFamily::G => rank == 2,
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(LieError::InvalidRank { family, rank })
        }
    }

    /// Parse a compact name such as `A1`, `b2` or `E8`.
    pub fn parse(s: &str) -> Result<Self, LieError> {
        let mut chars = s.chars();
        let fam = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => LieFamily::A,
            Some('B') => LieFamily::B,
            Some('C') => LieFamily::C,
            Some('D') => LieFamily::D,
            Some('E') => LieFamily::E,
            Some('F') => LieFamily::F,
            Some('G') => LieFamily::G,
            _ => return Err(LieError::Parse(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| LieError::Parse(s.to_string()))?;
        LieType::new(fam, rank)
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A weight in the fundamental-weight basis.
///
/// Every weight handled by this crate is integral (integer coordinates);
/// the coordinates are kept rational so that callers can also form
/// midpoints and other affine combinations when convenient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    pub coords: Vec<Rat>,
}

impl Weight {
    pub fn new(coords: Vec<Rat>) -> Self {
        Weight { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight {
            coords: coords.iter().map(|&c| Rat::from_integer(c)).collect(),
        }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![Rat::from_integer(0); rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.numer() == &0)
    }

    /// Integer coordinates, if the weight is integral.
    pub fn int_coords(&self) -> Option<Vec<i64>> {
        self.coords
            .iter()
            .map(|c| if c.is_integer() { Some(*c.numer()) } else { None })
            .collect()
    }

    pub fn is_dominant_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer() && c.numer() >= &0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Result of folding a weight to the fundamental alcove: the target weight
/// together with the sign of the folding element. Sign `0` means the
/// shifted weight landed on a reflection wall and the term is discarded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedWeight {
    pub weight: Weight,
    pub sign: i8,
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: LieFamily, rank: usize },
    #[error("cannot parse Lie type from `{0}`")]
    Parse(String),
    #[error("level {level} is below the minimal non-degenerate level {min} for {ty}")]
    Level { ty: String, level: i64, min: i64 },
    #[error("Weyl group of order {order} exceeds the enumeration limit {limit}")]
    Capacity { order: u128, limit: u128 },
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("invalid argument: {0}")]
    Argument(String),
}
