//! Flipping one digit of a trajectory label, as a physical randomiser keyed to
//! a deep digit of its input would.
//!
//! Changing digit `i` alone moves a label by `p^(k-1-i)`, which shrinks as `i`
//! grows. A change that takes the world off the invariant set also changes the
//! leading (membership) digit, so its distance is `p^(k-1)` no matter which
//! digit the randomiser reads.

use serde::{Deserialize, Serialize};

use crate::error::NumberError;
use crate::padic::{onset_membership, trajectory_distance, PadicDistance, TrajectoryLabel};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomiserReport {
    pub original: TrajectoryLabel,
    pub flipped: TrajectoryLabel,
    pub digit_index: usize,
    /// Leading digit just before the membership toggle, when one was applied.
    pub toggled_from: Option<u64>,
    pub onset_before: bool,
    pub onset_after: bool,
    pub distance: PadicDistance,
    /// Distance had only the chosen digit changed.
    pub digit_only_distance: PadicDistance,
}

impl RandomiserReport {
    /// Undoes the flip: restores the leading digit, then subtracts one at the
    /// flipped position.
    pub fn revert(&self) -> TrajectoryLabel {
        let mut label = self.flipped.clone();
        if let Some(lead) = self.toggled_from {
            label = label
                .with_leading_digit(lead)
                .expect("recorded digit is in range");
        }
        label
            .decrement_digit(self.digit_index)
            .expect("index was validated")
    }
}

fn toggle_membership(label: &TrajectoryLabel) -> TrajectoryLabel {
    let lead = if label.digits()[0] == 0 { 1 } else { 0 };
    label
        .with_leading_digit(lead)
        .expect("0 and 1 are digits for p >= 2")
}

/// Adds one (mod `p`) to the digit at `digit_index` and, if that leaves
/// membership unchanged, toggles the leading digit so the result crosses the
/// invariant-set boundary.
pub fn randomiser_digit_demo(
    label: &TrajectoryLabel,
    digit_index: usize,
) -> Result<RandomiserReport, NumberError> {
    let digit_only = label.increment_digit(digit_index)?;
    let onset_before = onset_membership(label);
    let (flipped, toggled_from) = if onset_membership(&digit_only) == onset_before {
        (toggle_membership(&digit_only), Some(digit_only.digits()[0]))
    } else {
        (digit_only.clone(), None)
    };
    Ok(RandomiserReport {
        onset_after: onset_membership(&flipped),
        distance: trajectory_distance(label, &flipped)?,
        digit_only_distance: trajectory_distance(label, &digit_only)?,
        original: label.clone(),
        flipped,
        digit_index,
        toggled_from,
        onset_before,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deep_flip_still_costs_the_full_gap() {
        let label = TrajectoryLabel::zeros(10, 7).unwrap();
        let rep = randomiser_digit_demo(&label, 3).unwrap();
        assert!(rep.onset_before);
        assert!(!rep.onset_after);
        assert_eq!(rep.distance.to_u128(), Some(1_000_000));
        assert_eq!(rep.digit_only_distance.to_u128(), Some(1_000));
    }

    #[test]
    fn gap_independent_of_digit_depth() {
        let label = TrajectoryLabel::zeros(10, 7).unwrap();
        let a = randomiser_digit_demo(&label, 3).unwrap();
        let b = randomiser_digit_demo(&label, 6).unwrap();
        assert_eq!(a.distance, b.distance);
        assert!(b.digit_only_distance < a.digit_only_distance);
    }

    #[test]
    fn revert_restores_original() {
        for digits in [
            vec![0, 4, 9, 2],
            vec![3, 0, 0, 9],
            vec![9, 9, 9, 9],
            vec![0, 0, 0, 0],
        ] {
            let label = TrajectoryLabel::new(10, digits).unwrap();
            for i in 0..4 {
                let rep = randomiser_digit_demo(&label, i).unwrap();
                let back = rep.revert();
                assert_eq!(back, label);
                assert_eq!(
                    trajectory_distance(&label, &back).unwrap(),
                    PadicDistance::Zero
                );
            }
        }
    }

    #[test]
    fn leading_digit_flip_needs_no_toggle() {
        let label = TrajectoryLabel::new(5, vec![0, 1, 2]).unwrap();
        let rep = randomiser_digit_demo(&label, 0).unwrap();
        assert_eq!(rep.toggled_from, None);
        assert_eq!(rep.flipped.digits(), &[1, 1, 2]);
    }

    #[test]
    fn index_out_of_range() {
        let label = TrajectoryLabel::zeros(10, 3).unwrap();
        assert_eq!(
            randomiser_digit_demo(&label, 3),
            Err(NumberError::DigitIndexOutOfRange { index: 3, len: 3 })
        );
    }
}
