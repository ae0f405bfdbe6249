//! Shared inputs for the codec benchmarks.

const PARAGRAPH: &str = "Există undeva, în domeniul înalt al geometriei, un loc luminos \
unde se întâlnește cu poezia.\nPe când ne-nvâltoream cu jocul,\nȘopteai: „Încercuie-mi \
mijlocul!”\nȘi-acum ți-aș împlini dorința,\nDar nu-ți cuprind circumferința!\n\
Nu este destul să fii bun. Trebuie să fii bun la ceva. (sorin@e-uvt.ro) & România; \
teorema lui Pitagora – binomul lui Newton: ’ceva’?\n";

/// Romanian text of at least `bytes` bytes, built from a fixed paragraph.
pub fn corpus(bytes: usize) -> String {
    let mut out = String::with_capacity(bytes + PARAGRAPH.len());
    while out.len() < bytes {
        out.push_str(PARAGRAPH);
    }
    out
}
