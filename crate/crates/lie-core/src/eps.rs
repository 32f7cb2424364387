//! Orthogonal (epsilon) coordinates for types B, C and D, used for the
//! half-integer display convention of so/sp weights.

use crate::types::{LieFamily, LieType, Rat, Weight};

/// Converts fundamental coordinates to epsilon coordinates for B, C, D.
/// Returns `None` for the other families.
pub fn to_epsilon(t: LieType, w: &Weight) -> Option<Vec<Rat>> {
    let r = t.rank;
    let a = &w.coords;
    let half = Rat::new(1, 2);
    match t.family {
        LieFamily::B => {
            // lambda_i = e_1 + ... + e_i for i < r, lambda_r = (e_1+...+e_r)/2
            Some(
                (0..r)
                    .map(|k| {
                        let tail: Rat = a[k..r - 1].iter().sum();
                        tail + a[r - 1] * half
                    })
                    .collect(),
            )
        }
        LieFamily::C => Some((0..r).map(|k| a[k..r].iter().sum()).collect()),
        LieFamily::D => {
            // lambda_{r-1} = (e_1+...+e_{r-1}-e_r)/2, lambda_r = (e_1+...+e_r)/2
            Some(
                (0..r)
                    .map(|k| {
                        if k < r - 2 {
                            let tail: Rat = a[k..r - 2].iter().sum();
                            tail + (a[r - 2] + a[r - 1]) * half
                        } else if k == r - 2 {
                            (a[r - 2] + a[r - 1]) * half
                        } else {
                            (a[r - 1] - a[r - 2]) * half
                        }
                    })
                    .collect(),
            )
        }
        _ => None,
    }
}

/// Inverse of [`to_epsilon`] where defined.
pub fn from_epsilon(t: LieType, eps: &[Rat]) -> Option<Weight> {
    let r = t.rank;
    match t.family {
        LieFamily::B => {
            let mut a = vec![Rat::from_integer(0); r];
            for k in 0..r - 1 {
                a[k] = eps[k] - eps[k + 1];
            }
            a[r - 1] = eps[r - 1] * Rat::from_integer(2);
            Some(Weight::new(a))
        }
        LieFamily::C => {
            let mut a = vec![Rat::from_integer(0); r];
            for k in 0..r - 1 {
                a[k] = eps[k] - eps[k + 1];
            }
            a[r - 1] = eps[r - 1];
            Some(Weight::new(a))
        }
        LieFamily::D => {
            let mut a = vec![Rat::from_integer(0); r];
            for k in 0..r - 2 {
                a[k] = eps[k] - eps[k + 1];
            }
            a[r - 2] = eps[r - 2] - eps[r - 1];
            a[r - 1] = eps[r - 2] + eps[r - 1];
            Some(Weight::new(a))
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::LieType;

    #[test]
    fn b2_labels_match_the_half_integer_convention() {
        let t = LieType::parse("B2").unwrap();
        // (0,5) in fundamental coordinates is (5/2, 5/2)
        let gamma = Weight::from_ints(&[0, 5]);
        assert_eq!(
            to_epsilon(t, &gamma).unwrap(),
            vec![Rat::new(5, 2), Rat::new(5, 2)]
        );
        // (1,2) is (2,1)
        let w = Weight::from_ints(&[1, 2]);
        assert_eq!(
            to_epsilon(t, &w).unwrap(),
            vec![Rat::from_integer(2), Rat::from_integer(1)]
        );
    }

    #[test]
    fn round_trip_b_c_d() {
        for name in ["B3", "C3", "D4"] {
            let t = LieType::parse(name).unwrap();
            for a in 0..2 {
                for b in 0..2 {
                    for c in 0..2 {
                        let mut coords = vec![a, b, c];
                        coords.resize(t.rank, 1);
                        let w = Weight::from_ints(&coords);
                        let eps = to_epsilon(t, &w).unwrap();
                        let back = from_epsilon(t, &eps).unwrap();
                        assert_eq!(back, w);
                    }
                }
            }
        }
    }

    #[test]
    fn type_a_has_no_epsilon_display() {
        let t = LieType::parse("A2").unwrap();
        assert!(to_epsilon(t, &Weight::zero(2)).is_none());
    }
}
