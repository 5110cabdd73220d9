//! Text and JSON rendering of polynomials.

use serde_json::{json, Value};

use crate::polyring::{Polynomial, RingElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Text,
    Json,
}

/// Descending powers joined by ` + `, e.g. `6x^2 + 6x` or `(1,2)x + (0,1)`;
/// unit coefficients are dropped in front of `x`. The output parses back
/// to the same polynomial.
pub fn format_polynomial(p: &Polynomial, mode: Mode) -> String {
    match mode {
        Mode::Text => text(p),
        Mode::Json => polynomial_json(p).to_string(),
    }
}

fn text(p: &Polynomial) -> String {
    let one = p.ring().one();
    let terms: Vec<String> = p
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let coef = if i > 0 && *c == one {
                String::new()
            } else {
                c.to_string()
            };
            match i {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{i}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_owned()
    } else {
        terms.join(" + ")
    }
}

pub(crate) fn element_json(e: &RingElement) -> Value {
    match e.residues() {
        [r] => Value::String(r.to_string()),
        rs => Value::Array(rs.iter().map(|r| Value::String(r.to_string())).collect()),
    }
}

/// `{text, degree, coefficients}` with coefficients in ascending order, each
/// a decimal string (a list of strings over a product ring).
pub fn polynomial_json(p: &Polynomial) -> Value {
    json!({
        "text": text(p),
        "degree": p.degree(),
        "coefficients": p.coeffs().iter().map(element_json).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::parse::parse_polynomial;
    use crate::polyring::RingDescriptor;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let z12 = RingDescriptor::zn(12u32).unwrap();
        let p = Polynomial::from_integers(&z12, [0, 6, 6]);
        assert_eq!(format_polynomial(&p, Mode::Text), "6x^2 + 6x");
        assert_eq!(format_polynomial(&Polynomial::zero(&z12), Mode::Text), "0");
        let q = Polynomial::from_integers(&z12, [2, 9, 1]);
        assert_eq!(format_polynomial(&q, Mode::Text), "x^2 + 9x + 2");
        assert_eq!(
            format_polynomial(&p, Mode::Json),
            r#"{"coefficients":["0","6","6"],"degree":2,"text":"6x^2 + 6x"}"#
        );
        let zero = polynomial_json(&Polynomial::zero(&z12));
        assert_eq!(zero["degree"], Value::Null);

        let r = RingDescriptor::new(vec![2u32.into(), 3u32.into()]).unwrap();
        let t = parse_polynomial("(1,2)x + (0,1) + x^3", &r).unwrap();
        assert_eq!(format_polynomial(&t, Mode::Text), "x^3 + (1,2)x + (0,1)");
        assert_eq!(polynomial_json(&t)["coefficients"][1], json!(["1", "2"]));
    }

    fn ring_and_coeffs() -> impl Strategy<Value = (Vec<u32>, Vec<Vec<i64>>)> {
        prop::collection::vec(1u32..=30, 1..=3).prop_flat_map(|moduli| {
            let arity = moduli.len();
            (
                Just(moduli),
                prop::collection::vec(prop::collection::vec(-100i64..100, arity), 0..8),
            )
        })
    }

    proptest! {
        #[test]
        fn parse_format_round_trip((moduli, raw) in ring_and_coeffs()) {
            let ring = RingDescriptor::new(moduli.into_iter().map(Into::into).collect()).unwrap();
            let coeffs = raw
                .iter()
                .map(|c| ring.element_from_ints(&c.iter().map(|&v| v.into()).collect::<Vec<_>>()).unwrap())
                .collect();
            let p = Polynomial::new(ring.clone(), coeffs).unwrap();
            let s = format_polynomial(&p, Mode::Text);
            let back = parse_polynomial(&s, &ring).unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(format_polynomial(&back, Mode::Text), s);
        }
    }
}
