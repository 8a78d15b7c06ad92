//! Helpers shared by the integration test targets.
#![allow(dead_code)] // not every test target uses every helper

/// Minimal XML well-formedness oracle: matched open/close tags, balanced
/// attribute quotes, declarations and self-closing tags allowed. Strict
/// enough to catch truncated or malformed output from the SVG emitter.
pub fn check_xml(text: &str) -> Result<(), String> {
    let mut stack: Vec<String> = Vec::new();
    let mut rest = text;
    let mut saw_element = false;
    while let Some(start) = rest.find('<') {
        let after = &rest[start + 1..];
        let end = after.find('>').ok_or("unterminated tag")?;
        let tag = &after[..end];
        if !tag.matches('"').count().is_multiple_of(2) {
            return Err(format!("unbalanced quotes in <{tag}>"));
        }
        if tag.starts_with('?') {
            // declaration
        } else if let Some(name) = tag.strip_prefix('/') {
            let open = stack
                .pop()
                .ok_or_else(|| format!("</{name}> without open"))?;
            if open != name.trim() {
                return Err(format!("mismatched </{}> closes <{}>", name.trim(), open));
            }
        } else if tag.ends_with('/') {
            saw_element = true;
        } else {
            let name = tag
                .split_whitespace()
                .next()
                .ok_or("empty tag")?
                .to_string();
            stack.push(name);
            saw_element = true;
        }
        rest = &after[end + 1..];
    }
    if !stack.is_empty() {
        return Err(format!("unclosed tags: {stack:?}"));
    }
    if !saw_element {
        return Err("no elements found".to_string());
    }
    Ok(())
}

/// Deterministic 64-bit linear congruential generator for randomized exact
/// checks; fixed seeds keep every run identical.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0
    }

    /// Uniform-ish value in `[0, bound)`.
    pub fn below(&mut self, bound: u64) -> u64 {
        (self.next_u64() >> 11) % bound
    }

    /// Signed value in `[-magnitude, magnitude]`.
    pub fn signed(&mut self, magnitude: i64) -> i64 {
        self.below(2 * magnitude as u64 + 1) as i64 - magnitude
    }
}
