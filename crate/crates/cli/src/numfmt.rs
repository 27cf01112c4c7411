/// Shortest representation that parses back to the same `f64`.
///
/// Plain decimal for magnitudes in `[1e-5, 1e16)`, scientific otherwise.
/// Negative zero prints as `0`.
pub fn fmt_f64(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let a = x.abs();
    if !x.is_finite() || (1e-5..1e16).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

pub fn fmt_slice(v: &[f64]) -> String {
    v.iter().map(|&x| fmt_f64(x)).collect::<Vec<_>>().join(",")
}

/// Parses `a,b,c` into reals.
pub fn parse_list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<f64>()
                .map_err(|_| format!("invalid number `{t}` in `{s}`"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats() {
        assert_eq!(fmt_f64(0.7071067811865475), "0.7071067811865475");
        assert_eq!(fmt_f64(-0.0), "0");
        assert_eq!(fmt_f64(1.0), "1");
        assert_eq!(fmt_f64(3.5230e-17), "3.523e-17");
        assert_eq!(fmt_slice(&[1.0, -2.5]), "1,-2.5");
    }

    #[test]
    fn round_trip() {
        for x in [0.1, 1.0 / 3.0, -2.0f64.sqrt(), 1e-300, 6.02e23, 12345.678] {
            assert_eq!(fmt_f64(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn parse_lists() {
        assert_eq!(parse_list("1,-1").unwrap(), [1.0, -1.0]);
        assert!(parse_list("1,,2").is_err());
        assert!(parse_list("a").is_err());
    }
}
