use std::io::{ErrorKind, Read};

use crate::CliError;

const CHUNK_SIZE: usize = 64 * 1024;

/// Reads `input` in fixed-size chunks and passes each as UTF-8 text.
///
/// A multi-byte character split by a read is carried over to the next
/// chunk, so memory stays bounded by the chunk size.
pub(crate) fn for_each_chunk(
    input: &mut dyn Read,
    mut f: impl FnMut(&str) -> Result<(), CliError>,
) -> Result<(), CliError> {
    let mut buf = vec![0u8; CHUNK_SIZE];
    let mut carried = 0;
    let mut offset = 0u64;
    loop {
        let n = match input.read(&mut buf[carried..]) {
            Ok(n) => n,
            Err(e) if e.kind() == ErrorKind::Interrupted => continue,
            Err(e) => return Err(CliError::Usage(format!("cannot read input: {e}"))),
        };
        if n == 0 {
            if carried > 0 {
                return Err(invalid_utf8(offset));
            }
            return Ok(());
        }
        let end = carried + n;
        let valid = match std::str::from_utf8(&buf[..end]) {
            Ok(text) => {
                f(text)?;
                end
            }
            Err(e) if e.error_len().is_none() => {
                let valid = e.valid_up_to();
                f(std::str::from_utf8(&buf[..valid]).expect("prefix is valid"))?;
                valid
            }
            Err(e) => return Err(invalid_utf8(offset + e.valid_up_to() as u64)),
        };
        buf.copy_within(valid..end, 0);
        carried = end - valid;
        offset += valid as u64;
    }
}

fn invalid_utf8(offset: u64) -> CliError {
    CliError::Data(format!("input is not valid UTF-8 at byte {offset}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Yields one byte per read, splitting every multi-byte character.
    struct Trickle<'a>(&'a [u8]);

    impl Read for Trickle<'_> {
        fn read(&mut self, buf: &mut [u8]) -> std::io::Result<usize> {
            match self.0.split_first() {
                Some((&b, rest)) if !buf.is_empty() => {
                    buf[0] = b;
                    self.0 = rest;
                    Ok(1)
                }
                _ => Ok(0),
            }
        }
    }

    #[test]
    fn reassembles_split_characters() {
        let text = "Țară și „ceva”";
        let mut out = String::new();
        for_each_chunk(&mut Trickle(text.as_bytes()), |c| {
            out.push_str(c);
            Ok(())
        })
        .unwrap();
        assert_eq!(out, text);
    }

    #[test]
    fn rejects_invalid_utf8() {
        let bytes = [b'a', b'b', 0xff, b'c'];
        let err = for_each_chunk(&mut &bytes[..], |_| Ok(())).unwrap_err();
        assert!(
            matches!(err, CliError::Data(ref m) if m.contains("byte 2")),
            "{err:?}"
        );
        let truncated = "aș".as_bytes();
        let err = for_each_chunk(&mut &truncated[..2], |_| Ok(())).unwrap_err();
        assert!(matches!(err, CliError::Data(_)));
    }
}
