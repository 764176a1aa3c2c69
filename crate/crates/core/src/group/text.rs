//! Text format for words: an optional `n=<n> k=<k>:` header followed by
//! parenthesized index tuples, e.g. `n=4 k=3: (1 2 3) (1 2 4)`. The empty
//! word is spelled `e`.

use super::{GroupSignature, Multiindex, Word};
use crate::error::{Error, Result};

pub fn format_letters(letters: &[Multiindex]) -> String {
    if letters.is_empty() {
        return "e".to_string();
    }
    letters
        .iter()
        .map(|m| m.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

impl Word {
    /// Text with the signature header, suitable for round-tripping without
    /// out-of-band flags.
    pub fn to_text_with_header(&self) -> String {
        format!("{}: {}", self.sig, self)
    }
}

fn parse_header(header: &str) -> Result<GroupSignature> {
    let mut n = None;
    let mut k = None;
    for field in header.split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("bad header field {field:?}")))?;
        let value: usize = value
            .parse()
            .map_err(|_| Error::Parse(format!("bad header value {value:?}")))?;
        match key {
            "n" => n = Some(value),
            "k" => k = Some(value),
            _ => return Err(Error::Parse(format!("unknown header key {key:?}"))),
        }
    }
    match (n, k) {
        (Some(n), Some(k)) => GroupSignature::new(n, k),
        _ => Err(Error::Parse("header needs both n and k".into())),
    }
}

/// Parses a word. `sig` is used when the text has no header; when both are
/// present they must agree.
pub fn parse_word(text: &str, sig: Option<GroupSignature>) -> Result<Word> {
    let (header_sig, body) = match text.split_once(':') {
        Some((header, body)) => (Some(parse_header(header)?), body),
        None => (None, text),
    };
    let sig = match (header_sig, sig) {
        (Some(h), Some(s)) if h != s => {
            return Err(Error::SignatureMismatch(h.to_string(), s.to_string()))
        }
        (Some(h), _) => h,
        (None, Some(s)) => s,
        (None, None) => return Err(Error::Parse("no signature given".into())),
    };

    let body = body.trim();
    if body == "e" || body.is_empty() {
        return Ok(Word::identity(sig));
    }

    let mut letters = Vec::new();
    let mut rest = body;
    loop {
        rest = rest.trim_start();
        if rest.is_empty() {
            break;
        }
        let inner = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected '(' at {rest:?}")))?;
        let close = inner
            .find(')')
            .ok_or_else(|| Error::Parse("unclosed '('".into()))?;
        let values = inner[..close]
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad index {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        letters.push(Multiindex::new(&values, sig)?);
        rest = &inner[close + 1..];
    }
    Ok(Word::from_parts(sig, letters))
}
