//! Unitarity flags: the proven-unitary root-of-unity case, the proven
//! non-unitarizable families, and the dimension-sign necessary condition.

use cyclo::{is_positive_real, CycloNumber};
use lie_core::{LieFamily, LieType};

/// Why a category is known unitary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitaryEvidence {
    /// Positive-definite Hermitian form for `q = e^{pi i/l}` with `m | l`.
    PositiveFormAtPrimitiveQ,
    None,
}

/// Why no tensor-equivalent unitary category can exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NonUnitarizableEvidence {
    /// Grothendieck-semiring character analysis for odd levels with
    /// `2(2r+1) < l` (types B and, by rank-level duality, C).
    GrothendieckCharacters,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitarityReport {
    pub known_unitary: bool,
    pub unitary_evidence: UnitaryEvidence,
    pub known_not_unitarizable: bool,
    pub non_unitarizable_evidence: NonUnitarizableEvidence,
    pub dims_positive: bool,
}

/// Assembles the report for one `(type, l, z)` with computed dimensions.
pub fn unitarity_report(
    t: LieType,
    ell: i64,
    z: i64,
    m: i64,
    dims: &[CycloNumber],
) -> UnitarityReport {
    let q_is_primitive = z == 1 || z == 2 * ell - 1; // q = e^{+-pi i/l}
    let known_unitary = ell % m == 0 && q_is_primitive;
    let r = t.rank as i64;
    let known_not_unitarizable = matches!(t.family, LieFamily::B | LieFamily::C)
        && ell % 2 == 1
        && 2 * (2 * r + 1) < ell;
    let dims_positive = dims.iter().all(is_positive_real);
    debug_assert!(!known_unitary || !known_not_unitarizable);
    UnitarityReport {
        known_unitary,
        unitary_evidence: if known_unitary {
            UnitaryEvidence::PositiveFormAtPrimitiveQ
        } else {
            UnitaryEvidence::None
        },
        known_not_unitarizable,
        non_unitarizable_evidence: if known_not_unitarizable {
            NonUnitarizableEvidence::GrothendieckCharacters
        } else {
            NonUnitarizableEvidence::None
        },
        dims_positive,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b2_threshold_for_non_unitarizability() {
        let t = LieType::new(LieFamily::B, 2).unwrap();
        let dims = vec![CycloNumber::one(4)];
        // 2(2r+1) = 10: covered at l = 13 and 11, not at l = 9
        let rep = unitarity_report(t, 13, 1, 2, &dims);
        assert!(rep.known_not_unitarizable);
        assert!(!rep.known_unitary);
        assert!(unitarity_report(t, 11, 1, 2, &dims).known_not_unitarizable);
        assert!(!unitarity_report(t, 9, 1, 2, &dims).known_not_unitarizable);
    }

    #[test]
    fn unitary_flag_needs_divisible_level_and_primitive_q() {
        let t = LieType::new(LieFamily::A, 1).unwrap();
        let dims = vec![CycloNumber::one(4)];
        assert!(unitarity_report(t, 5, 1, 1, &dims).known_unitary);
        assert!(unitarity_report(t, 5, 9, 1, &dims).known_unitary); // z = 2l-1
        assert!(!unitarity_report(t, 5, 3, 1, &dims).known_unitary);
        let b = LieType::new(LieFamily::B, 2).unwrap();
        assert!(!unitarity_report(b, 9, 1, 2, &dims).known_unitary);
        assert!(unitarity_report(b, 10, 1, 2, &dims).known_unitary);
    }
}
