//! Text forms accepted on the command line.

use affine_hecke::weyl::{ExtAffineWeylElement, Word};

/// Parses an element of rank `rank`. Accepted forms:
/// `e`, a word `[0,1,0]` or `0,1,0`, a translation `t[1,0]`, the text form
/// `perm=[..];trans=[..]`, its JSON object form, and `s'0` for `s_0 s_1 s_0`.
pub fn parse_element(text: &str, rank: usize) -> Result<ExtAffineWeylElement, String> {
    let t = text.trim();
    let g = if matches!(t, "e" | "id" | "identity" | "[]") {
        ExtAffineWeylElement::identity(rank)
    } else if matches!(t, "s'0" | "s0'" | "s'_0") {
        word_element(&[0, 1, 0], rank)?
    } else if t.starts_with("perm=") {
        t.parse().map_err(|e: affine_hecke::Error| e.to_string())?
    } else if t.starts_with('{') {
        serde_json::from_str(t).map_err(|e| e.to_string())?
    } else if let Some(rest) = t.strip_prefix('t') {
        let lambda = parse_ints(rest.trim_start_matches([':', '=']))?;
        ExtAffineWeylElement::translation(&lambda)
    } else {
        let letters = parse_ints(t)?
            .into_iter()
            .map(|i| usize::try_from(i).map_err(|_| format!("negative generator index {i}")))
            .collect::<Result<Vec<_>, _>>()?;
        word_element(&letters, rank)?
    };
    if g.rank() != rank {
        return Err(format!("{t} has rank {}, expected {rank}", g.rank()));
    }
    Ok(g)
}

fn word_element(letters: &[usize], rank: usize) -> Result<ExtAffineWeylElement, String> {
    Word::new(letters.to_vec()).evaluate(rank).map_err(|e| e.to_string())
}

/// `[1,-2]`, `1,-2` or `1 -2`.
pub fn parse_ints(text: &str) -> Result<Vec<i32>, String> {
    let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
    inner
        .split([',', ' '])
        .filter(|s| !s.is_empty())
        .map(|s| s.trim().parse::<i32>().map_err(|e| format!("{s:?}: {e}")))
        .collect()
}

/// A box `lo..hi` (inclusive) of coordinates.
pub fn parse_box(text: &str) -> Result<(i32, i32), String> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| format!("expected LO..HI, got {text:?}"))?;
    let lo: i32 = lo.trim().parse().map_err(|e| format!("{lo:?}: {e}"))?;
    let hi: i32 = hi.trim().trim_start_matches('=').parse().map_err(|e| format!("{hi:?}: {e}"))?;
    if lo > hi {
        return Err(format!("empty box {lo}..{hi}"));
    }
    Ok((lo, hi))
}
