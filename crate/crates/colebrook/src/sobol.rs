//! Two-dimensional Sobol low-discrepancy sequence.
//!
//! Standard 32-bit Gray-code construction with published direction
//! numbers:
//!
//! * dimension 1 is the van der Corput sequence in base 2
//!   (`v[k] = 2^{31−k}`);
//! * dimension 2 uses the degree-1 primitive polynomial `x + 1` with
//!   initial direction integer m₁ = 1, giving the m-sequence
//!   1, 3, 5, 15, 17, 51, 85, 255, …
//!
//! Points are emitted in Gray-code order starting from index 1 — the
//! origin (0, 0) is skipped, so the sequence opens with (0.5, 0.5),
//! (0.75, 0.25), (0.25, 0.75), (0.375, 0.375), … All coordinates are exact
//! multiples of 2⁻³² in [0, 1), and the sequence is a pure function of n:
//! identical across runs, platforms, and thread counts.

/// Number of 32-bit direction numbers per dimension.
const BITS: usize = 32;

/// Direction numbers for both dimensions.
fn direction_numbers() -> ([u32; BITS], [u32; BITS]) {
    let mut v1 = [0u32; BITS];
    let mut v2 = [0u32; BITS];
    // Dimension 1: van der Corput.
    for (k, v) in v1.iter_mut().enumerate() {
        *v = 1u32 << (31 - k);
    }
    // Dimension 2: m-sequence of x + 1 (m_k = 2·m_{k−1} XOR m_{k−1}),
    // widened to u64 during the recurrence to keep the shifts obviously
    // in range.
    let mut m = [0u64; BITS];
    m[0] = 1;
    for k in 1..BITS {
        m[k] = (2 * m[k - 1]) ^ m[k - 1];
    }
    for (k, v) in v2.iter_mut().enumerate() {
        *v = (m[k] << (31 - k)) as u32;
    }
    (v1, v2)
}

/// First n points of the 2-d Sobol sequence (origin skipped).
pub fn sobol_2d(n: usize) -> Vec<(f64, f64)> {
    let (v1, v2) = direction_numbers();
    let scale = 1.0 / (1u64 << 32) as f64;
    let mut out = Vec::with_capacity(n);
    let (mut s1, mut s2) = (0u32, 0u32);
    for i in 1..=n as u64 {
        let c = i.trailing_zeros() as usize;
        s1 ^= v1[c];
        s2 ^= v2[c];
        out.push((s1 as f64 * scale, s2 as f64 * scale));
    }
    out
}
