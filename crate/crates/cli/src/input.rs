//! Parsing of numeric command-line values.

use bisector_core::Rat;

/// Exact rational from `n`, `n/d`, `n.ddd`, or any of those followed by an
/// exponent such as `1e-12`.
pub fn parse_rat(text: &str) -> Result<Rat, String> {
    let text = text.trim();
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(i) => {
            let exp: i32 = text[i + 1..]
                .parse()
                .map_err(|_| format!("bad exponent in {text:?}"))?;
            (&text[..i], exp)
        }
        None => (text, 0),
    };
    if exponent != 0 && mantissa.contains('/') {
        return Err(format!("exponent not allowed on a fraction: {text:?}"));
    }
    if exponent.unsigned_abs() > 1000 {
        return Err(format!("exponent out of range in {text:?}"));
    }
    let m = Rat::parse(mantissa).map_err(|e| format!("{text:?}: {e}"))?;
    let scale = Rat::from(10).pow(exponent.unsigned_abs());
    if exponent >= 0 {
        Ok(m * scale)
    } else {
        m.checked_div(&scale).map_err(|e| e.to_string())
    }
}

pub fn parse_positive(text: &str) -> Result<Rat, String> {
    let r = parse_rat(text)?;
    if !r.is_positive() {
        return Err(format!("must be positive, got {text}"));
    }
    Ok(r)
}

/// Apex bisector input: a positive rational or the literal `symbolic`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QInput {
    Rational(Rat),
    Symbolic,
}

pub fn parse_q(text: &str) -> Result<QInput, String> {
    if text.trim() == "symbolic" {
        return Ok(QInput::Symbolic);
    }
    parse_positive(text).map(QInput::Rational)
}
