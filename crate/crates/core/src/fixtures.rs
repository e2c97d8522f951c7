//! Standard small codes used as test fixtures and benchmarks.

use crate::codes::LinearCode;
use crate::gf2::Gf2Matrix;

fn code(rows: &[&str]) -> LinearCode {
    LinearCode::from_rows(&Gf2Matrix::parse_rows(rows).expect("fixture rows are uniform"))
}

pub fn repetition(n: usize) -> LinearCode {
    LinearCode::repetition(n)
}

pub fn even_weight(n: usize) -> LinearCode {
    LinearCode::even_weight(n)
}

/// Hamming `[7, 4, 3]` in systematic form.
pub fn hamming_7_4() -> LinearCode {
    code(&["1000110", "0100101", "0010011", "0001111"])
}

/// Extended Hamming `[8, 4, 4]`.
pub fn extended_hamming_8_4() -> LinearCode {
    code(&["10001101", "01001011", "00100111", "00011110"])
}

/// Rows of the systematic `[I | B]` generator of the extended Golay code.
///
/// `B` borders the circulant of the quadratic residues mod 11 with a row
/// `0 1…1` and a column of ones.
pub fn extended_golay_rows() -> Vec<String> {
    const QR: [u8; 11] = [1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0];
    (0..12)
        .map(|i| {
            let mut s = String::with_capacity(24);
            for j in 0..12 {
                s.push(if i == j { '1' } else { '0' });
            }
            if i == 0 {
                s.push('0');
                s.push_str(&"1".repeat(11));
            } else {
                s.push('1');
                for j in 0..11 {
                    s.push(if QR[(j + 11 - (i - 1)) % 11] == 1 {
                        '1'
                    } else {
                        '0'
                    });
                }
            }
            s
        })
        .collect()
}

/// Extended Golay `[24, 12, 8]`.
pub fn extended_golay() -> LinearCode {
    let rows = extended_golay_rows();
    let refs: Vec<&str> = rows.iter().map(String::as_str).collect();
    code(&refs)
}
