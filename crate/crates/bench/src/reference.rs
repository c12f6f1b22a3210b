//! The platform C library's `strtod`/`strtof`, used as the reference parser.

use std::ffi::{c_char, CStr};

/// Parses the NUL-terminated number at `text` with the C library and returns
/// the value with the count of bytes consumed.
pub fn strtod(text: &CStr) -> (f64, usize) {
    let mut end: *mut c_char = std::ptr::null_mut();
    // SAFETY: `text` is NUL-terminated and `end` is a valid out-pointer.
    let value = unsafe { libc::strtod(text.as_ptr(), &mut end) };
    (value, end as usize - text.as_ptr() as usize)
}

pub fn strtof(text: &CStr) -> (f32, usize) {
    let mut end: *mut c_char = std::ptr::null_mut();
    // SAFETY: as above.
    let value = unsafe { libc::strtof(text.as_ptr(), &mut end) };
    (value, end as usize - text.as_ptr() as usize)
}

/// Lines packed back to back, each followed by a NUL, so both parsers can
/// read them in place without allocating.
pub struct PackedLines {
    buffer: Vec<u8>,
    /// `(start, end)` of each line, end excluding the NUL.
    spans: Vec<(usize, usize)>,
}

impl PackedLines {
    pub fn new<S: AsRef<str>>(lines: &[S]) -> Self {
        let total: usize = lines.iter().map(|l| l.as_ref().len() + 1).sum();
        let mut buffer = Vec::with_capacity(total);
        let mut spans = Vec::with_capacity(lines.len());
        for line in lines {
            let start = buffer.len();
            buffer.extend_from_slice(line.as_ref().as_bytes());
            spans.push((start, buffer.len()));
            buffer.push(0);
        }
        PackedLines { buffer, spans }
    }

    pub fn len(&self) -> usize {
        self.spans.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spans.is_empty()
    }

    /// Total bytes of text, NULs excluded.
    pub fn text_bytes(&self) -> usize {
        self.buffer.len() - self.spans.len()
    }

    #[inline]
    pub fn line(&self, i: usize) -> &[u8] {
        let (start, end) = self.spans[i];
        &self.buffer[start..end]
    }

    #[inline]
    pub fn c_line(&self, i: usize) -> &CStr {
        let (start, end) = self.spans[i];
        // The buffer has a NUL at `end` and lines contain no interior NUL
        // in practice; fall back to the first NUL if one does.
        CStr::from_bytes_until_nul(&self.buffer[start..=end]).expect("NUL terminator")
    }

    pub fn lines(&self) -> impl Iterator<Item = &[u8]> {
        (0..self.len()).map(move |i| self.line(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strtod_basics() {
        assert_eq!(strtod(c"0.1"), (0.1, 3));
        assert_eq!(strtod(c"2.5e-3xyz"), (2.5e-3, 6));
        assert_eq!(strtof(c"0.1"), (0.1f32, 3));
    }

    #[test]
    fn packing() {
        let packed = PackedLines::new(&["1.5", "", "-2e3"]);
        assert_eq!(packed.len(), 3);
        assert_eq!(packed.line(2), b"-2e3");
        assert_eq!(packed.c_line(0).to_bytes(), b"1.5");
        assert_eq!(packed.text_bytes(), 7);
    }
}
