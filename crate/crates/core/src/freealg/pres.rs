//! Plain-text presentation files.
//!
//! ```text
//! letters: y z x b a
//! order: y < z < x < b < a
//! weights: y=6 z=7 x=1 b=1 a=1
//! rel: y^3 + x z + (0/1 + -1/1*xi) a^3
//! ```
//!
//! The `letters:` line declares ascending precedence; `order:` repeats it for
//! the reader and is validated against `letters:`. `weights:` is optional
//! (default 1). Coefficients use the canonical Q(xi) form `p/q + r/s*xi`,
//! parenthesized; bare rationals and a leading `-` are also accepted.

use super::{Alphabet, NCPoly, Word};
use crate::exactmath::CycQ6;
use crate::Error;

/// A parsed presentation: an ordered alphabet plus relation polynomials.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub alphabet: Alphabet,
    pub relations: Vec<NCPoly>,
}

pub fn render_presentation(p: &Presentation) -> String {
    let names: Vec<&str> = p.alphabet.names().iter().map(String::as_str).collect();
    let mut out = String::new();
    out.push_str(&format!("letters: {}\n", names.join(" ")));
    out.push_str(&format!("order: {}\n", names.join(" < ")));
    let weights: Vec<String> = names
        .iter()
        .zip(p.alphabet.weights())
        .map(|(n, w)| format!("{n}={w}"))
        .collect();
    out.push_str(&format!("weights: {}\n", weights.join(" ")));
    for rel in &p.relations {
        out.push_str(&format!("rel: {}\n", render_poly(rel, &p.alphabet)));
    }
    out
}

fn render_poly(p: &NCPoly, alph: &Alphabet) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut words: Vec<&Word> = p.terms.keys().collect();
    words.sort_by(|a, b| alph.cmp_words(b, a));
    let mut out = String::new();
    for w in words {
        if !out.is_empty() {
            out.push_str(" + ");
        }
        out.push_str(&format!("({})", p.terms[w].render()));
        if !w.is_empty() {
            out.push(' ');
            out.push_str(&alph.render_word(w));
        }
    }
    out
}

pub fn parse_presentation(text: &str) -> Result<Presentation, Error> {
    let mut names: Option<Vec<String>> = None;
    let mut weights: Option<Vec<u64>> = None;
    let mut rels: Vec<String> = Vec::new();
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("letters:") {
            names = Some(rest.split_whitespace().map(str::to_string).collect());
        } else if let Some(rest) = line.strip_prefix("order:") {
            let declared: Vec<String> = rest
                .split('<')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect();
            if let Some(n) = &names {
                if *n != declared {
                    return Err(Error::Parse("order line disagrees with letters line".into()));
                }
            } else {
                names = Some(declared);
            }
        } else if let Some(rest) = line.strip_prefix("weights:") {
            let n = names
                .as_ref()
                .ok_or_else(|| Error::Parse("weights before letters".into()))?;
            let mut w = vec![1u64; n.len()];
            for part in rest.split_whitespace() {
                let (name, val) = part
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("bad weight `{part}`")))?;
                let idx = n
                    .iter()
                    .position(|x| x == name)
                    .ok_or_else(|| Error::Parse(format!("unknown letter `{name}` in weights")))?;
                w[idx] = val
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad weight value `{val}`")))?;
            }
            weights = Some(w);
        } else if let Some(rest) = line.strip_prefix("rel:") {
            rels.push(rest.trim().to_string());
        } else {
            return Err(Error::Parse(format!("unrecognized line `{line}`")));
        }
    }
    let names = names.ok_or_else(|| Error::Parse("missing letters line".into()))?;
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let alphabet = match weights {
        Some(w) => Alphabet::with_weights(&name_refs, &w),
        None => Alphabet::new(&name_refs),
    };
    let relations = rels
        .iter()
        .map(|r| parse_poly(r, &alphabet))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Presentation {
        alphabet,
        relations,
    })
}

/// Parse a polynomial like `y^3 + (0/1 + -1/1*xi) a^3 - 2 x y`.
pub fn parse_poly(s: &str, alph: &Alphabet) -> Result<NCPoly, Error> {
    let mut out = NCPoly::zero();
    for (sign, term) in split_terms(s)? {
        if term.is_empty() {
            return Err(Error::Parse(format!("empty term in `{s}`")));
        }
        let (mut coeff, word) = parse_term(&term, alph)?;
        if sign < 0 {
            coeff = -coeff;
        }
        out.add_term(word, &coeff);
    }
    Ok(out)
}

/// Split on top-level `+`/`-`, respecting parentheses.
fn split_terms(s: &str) -> Result<Vec<(i32, String)>, Error> {
    let mut terms = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut sign = 1;
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse("unbalanced parentheses".into()));
                }
                cur.push(ch);
            }
            '+' | '-' if depth == 0 => {
                if cur.trim().is_empty() && ch == '-' && terms.is_empty() && sign == 1 {
                    sign = -1; // leading minus
                } else if cur.trim().is_empty() {
                    return Err(Error::Parse(format!("dangling operator in `{s}`")));
                } else {
                    terms.push((sign, cur.trim().to_string()));
                    cur = String::new();
                    sign = if ch == '-' { -1 } else { 1 };
                }
            }
            _ => cur.push(ch),
        }
    }
    if depth != 0 {
        return Err(Error::Parse("unbalanced parentheses".into()));
    }
    if !cur.trim().is_empty() {
        terms.push((sign, cur.trim().to_string()));
    }
    Ok(terms)
}

fn parse_term(term: &str, alph: &Alphabet) -> Result<(CycQ6, Word), Error> {
    let term = term.trim();
    let (coeff, rest) = if let Some(stripped) = term.strip_prefix('(') {
        let close = stripped
            .find(')')
            .ok_or_else(|| Error::Parse("missing `)`".into()))?;
        let c: CycQ6 = stripped[..close].parse()?;
        (c, stripped[close + 1..].trim().to_string())
    } else {
        // Maybe a bare rational prefix before the first letter token.
        let mut parts = term.split_whitespace().peekable();
        match parts.peek() {
            Some(tok) if tok.chars().next().is_some_and(|c| c.is_ascii_digit()) => {
                let c: CycQ6 = tok.parse::<CycQ6>()?;
                parts.next();
                (c, parts.collect::<Vec<_>>().join(" "))
            }
            _ => (CycQ6::one(), term.to_string()),
        }
    };
    let mut w: Word = Vec::new();
    for tok in rest.split_whitespace() {
        let (name, exp) = match tok.split_once('^') {
            Some((n, e)) => (
                n,
                e.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?,
            ),
            None => (tok, 1),
        };
        if name == "1" {
            continue;
        }
        let l = alph
            .letter(name)
            .ok_or_else(|| Error::Parse(format!("unknown letter `{name}`")))?;
        for _ in 0..exp {
            w.push(l);
        }
    }
    Ok((coeff, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::word;

    #[test]
    fn round_trip() {
        let alph = Alphabet::with_weights(&["y", "x", "a"], &[4, 1, 1]);
        let mut rel = NCPoly::monomial(word(&alph, &["y", "y", "y"]));
        rel.add_term(word(&alph, &["x", "y", "x"]), &CycQ6::xi());
        rel.add_term(Vec::new(), &-CycQ6::from_ratio(1, 3));
        let pres = Presentation {
            alphabet: alph,
            relations: vec![rel],
        };
        let text = render_presentation(&pres);
        let back = parse_presentation(&text).unwrap();
        assert_eq!(back.alphabet, pres.alphabet);
        assert_eq!(back.relations, pres.relations);
    }

    #[test]
    fn parse_shorthand() {
        let alph = Alphabet::new(&["a", "b"]);
        let p = parse_poly("a^2 b - 2 b a + (xi) 1", &alph).unwrap();
        assert_eq!(p.terms.len(), 3);
        assert_eq!(p.terms[&word(&alph, &["a", "a", "b"])], CycQ6::one());
        assert_eq!(p.terms[&word(&alph, &["b", "a"])], CycQ6::from_int(-2));
        assert_eq!(p.terms[&Vec::new()], CycQ6::xi());
    }
}
