//! Rotation about the trajectory axis, used to map the particle frame to
//! the excitation frame.

/// Rotate a 3-vector about the first axis by `angle` radians.
///
/// The matrix rows are (1,0,0), (0,cosφ,sinφ), (0,−sinφ,cosφ); the
/// transform preserves the Euclidean norm.
pub fn rotate_so3_x(angle: f64, v: [f64; 3]) -> [f64; 3] {
    let (sin, cos) = angle.sin_cos();
    [v[0], cos * v[1] + sin * v[2], -sin * v[1] + cos * v[2]]
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn norm(v: [f64; 3]) -> f64 {
        (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
    }

    #[test]
    fn zero_angle_is_identity() {
        assert_eq!(rotate_so3_x(0.0, [1.0, 2.0, 3.0]), [1.0, 2.0, 3.0]);
    }

    #[test]
    fn quarter_turn_swaps_axes() {
        let r = rotate_so3_x(std::f64::consts::FRAC_PI_2, [0.0, 1.0, 0.0]);
        assert_relative_eq!(r[0], 0.0, epsilon = 1e-15);
        assert_relative_eq!(r[1], 0.0, epsilon = 1e-15);
        assert_relative_eq!(r[2], -1.0, epsilon = 1e-15);
    }

    proptest! {
        #[test]
        fn preserves_norm(
            angle in -10.0f64..10.0,
            x in -100.0f64..100.0,
            y in -100.0f64..100.0,
            z in -100.0f64..100.0,
        ) {
            let v = [x, y, z];
            let r = rotate_so3_x(angle, v);
            prop_assert!((norm(r) - norm(v)).abs() <= 1e-12 * norm(v).max(1.0));
        }

        #[test]
        fn negative_angle_inverts(
            angle in -10.0f64..10.0,
            x in -100.0f64..100.0,
            y in -100.0f64..100.0,
            z in -100.0f64..100.0,
        ) {
            let v = [x, y, z];
            let back = rotate_so3_x(-angle, rotate_so3_x(angle, v));
            let scale = norm(v).max(1.0);
            for i in 0..3 {
                prop_assert!((back[i] - v[i]).abs() <= 1e-12 * scale);
            }
        }
    }
}
