//! Univariate integer polynomials in `t` as written on the command line:
//! `0`, `2t`, `t+t^2`, `3 + 2*t^4 - t^5`.

use crate::CliError;

/// Coefficients indexed by degree.
pub fn parse_poly(text: &str) -> Result<Vec<i64>, CliError> {
    let bad = |why: &str| CliError::Usage(format!("invalid polynomial {text:?}: {why}"));
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad("empty"));
    }
    let mut coeffs: Vec<i64> = Vec::new();
    let mut rest = compact.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let sign: i64 = match rest.as_bytes()[0] {
            b'+' => {
                rest = &rest[1..];
                1
            }
            b'-' => {
                rest = &rest[1..];
                -1
            }
            _ if first => 1,
            _ => return Err(bad("expected '+' or '-' between terms")),
        };
        first = false;
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let (term, tail) = rest.split_at(end);
        rest = tail;
        let (coefficient, degree) = parse_term(term).ok_or_else(|| bad(&format!("cannot read term {term:?}")))?;
        let degree = usize::try_from(degree).map_err(|_| bad("degree too large"))?;
        if coeffs.len() <= degree {
            coeffs.resize(degree + 1, 0);
        }
        coeffs[degree] = sign
            .checked_mul(coefficient)
            .and_then(|c| coeffs[degree].checked_add(c))
            .ok_or_else(|| bad("coefficient overflow"))?;
    }
    Ok(coeffs)
}

fn parse_term(term: &str) -> Option<(i64, u32)> {
    let Some(t) = term.find('t') else {
        return Some((term.parse().ok()?, 0));
    };
    let (head, tail) = term.split_at(t);
    let head = head.strip_suffix('*').unwrap_or(head);
    let coefficient = if head.is_empty() { 1 } else { head.parse().ok()? };
    let degree = match &tail[1..] {
        "" => 1,
        power => power.strip_prefix('^')?.parse().ok()?,
    };
    Some((coefficient, degree))
}
