use num_complex::Complex64;

/// `a`, `bi` or `a±bi`, with values that round to zero shown as zero.
pub fn complex(z: Complex64, full_precision: bool) -> String {
    let clean = |v: f64| {
        if !full_precision && v.abs() < 0.005 {
            0.0
        } else {
            v
        }
    };
    let (re, im) = (clean(z.re), clean(z.im));
    let num = |v: f64| {
        if full_precision {
            format!("{v:?}")
        } else {
            format!("{v:.2}")
        }
    };
    match (re == 0.0, im == 0.0) {
        (_, true) => num(re),
        (true, false) => format!("{}i", num(im)),
        (false, false) => {
            let sign = if im < 0.0 { '-' } else { '+' };
            format!("{}{sign}{}i", num(re), num(im.abs()))
        }
    }
}

pub fn roots(list: &[Complex64], full_precision: bool) -> String {
    let parts: Vec<String> = list.iter().map(|&z| complex(z, full_precision)).collect();
    format!("{{{}}}", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_decimals() {
        assert_eq!(complex(Complex64::new(-0.001, 1.8), false), "1.80i");
        assert_eq!(
            complex(Complex64::new(0.4812, -1.7995), false),
            "0.48-1.80i"
        );
        assert_eq!(complex(Complex64::new(-0.0, 0.0), false), "0.00");
        assert_eq!(complex(Complex64::new(2.5, 0.0), true), "2.5");
        assert_eq!(complex(Complex64::new(1e-80, 1.0), true), "1e-80+1.0i");
    }
}
