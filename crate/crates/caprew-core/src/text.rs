//! Text normalization shared by the mock model implementations.
//!
//! Every mock rule (judge verdicts, grounding scores, bag-of-words
//! embeddings) is defined in terms of these functions, so they must stay
//! bit-exact: lowercase, replace any non-alphanumeric character with a
//! space, collapse whitespace.

/// Stopwords dropped when scoring grounding of a sub-caption statement.
pub const STOPWORDS: [&str; 10] = ["a", "an", "the", "it", "is", "on", "of", "and", "in", "with"];

/// Lowercase, strip punctuation, collapse whitespace.
pub fn normalize(text: &str) -> String {
    let lowered = text.to_lowercase();
    let mut out = String::with_capacity(lowered.len());
    let mut pending_space = false;
    for ch in lowered.chars() {
        if ch.is_alphanumeric() {
            if pending_space && !out.is_empty() {
                out.push(' ');
            }
            pending_space = false;
            out.push(ch);
        } else {
            pending_space = true;
        }
    }
    out
}

/// Normalized whitespace-separated tokens.
pub fn tokenize(text: &str) -> Vec<String> {
    normalize(text)
        .split_whitespace()
        .map(str::to_string)
        .collect()
}

/// Tokens with stopwords removed, deduplicated, input order preserved.
pub fn content_tokens(text: &str) -> Vec<String> {
    let mut seen = Vec::new();
    for tok in tokenize(text) {
        if STOPWORDS.contains(&tok.as_str()) {
            continue;
        }
        if !seen.contains(&tok) {
            seen.push(tok);
        }
    }
    seen
}

/// FNV-1a 64-bit hash.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const PRIME: u64 = 0x0000_0100_0000_01b3;
    let mut hash = OFFSET;
    for &b in bytes {
        hash ^= u64::from(b);
        hash = hash.wrapping_mul(PRIME);
    }
    hash
}
