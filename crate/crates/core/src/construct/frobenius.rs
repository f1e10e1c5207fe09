use super::ConstructionError;

/// Writes q = x·r + y·(r+1) with x, y ≥ 0 and y as small as possible.
///
/// Since q ≡ y (mod r), the least candidate is y = q mod r; if that one
/// overshoots q every larger candidate does too. Always succeeds once
/// q ≥ r(r−1), and often below that.
pub fn frobenius_decompose(q: usize, r: usize) -> Result<(usize, usize), ConstructionError> {
    if r == 0 {
        return Err(ConstructionError::QNotRepresentable { q, r });
    }
    let y = q % r;
    let tall = y * (r + 1);
    if tall > q {
        return Err(ConstructionError::QNotRepresentable { q, r });
    }
    Ok(((q - tall) / r, y))
}
