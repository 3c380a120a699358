//! Console transcripts embedded in the markdown docs.

/// Splits a shell line on spaces, honoring double quotes.
pub fn shell_words(line: &str) -> Vec<String> {
    let mut words = Vec::new();
    let mut cur = String::new();
    let (mut quoted, mut any) = (false, false);
    for ch in line.chars() {
        match ch {
            '"' => {
                quoted = !quoted;
                any = true;
            }
            ' ' if !quoted => {
                if any {
                    words.push(std::mem::take(&mut cur));
                    any = false;
                }
            }
            _ => {
                cur.push(ch);
                any = true;
            }
        }
    }
    if any {
        words.push(cur);
    }
    words
}

pub struct Transcript {
    pub argv: Vec<String>,
    pub stdout: String,
    pub code: Option<i32>,
}

/// Console blocks of a markdown file: `$ orbistack ...`, its output, and
/// optionally `$ echo $?` with the exit code.
pub fn transcripts(markdown: &str) -> Vec<Transcript> {
    let mut out = Vec::new();
    let mut lines = markdown.lines();
    while let Some(line) = lines.next() {
        if line.trim() != "```console" {
            continue;
        }
        let mut current: Option<Transcript> = None;
        let mut awaiting_code = false;
        for line in lines.by_ref() {
            if line.trim() == "```" {
                break;
            }
            if let Some(cmd) = line.strip_prefix("$ ") {
                if cmd == "echo $?" {
                    awaiting_code = true;
                    continue;
                }
                out.extend(current.take());
                let words = shell_words(cmd);
                current = Some(Transcript {
                    argv: words[1..].to_vec(),
                    stdout: String::new(),
                    code: None,
                });
            } else if awaiting_code {
                if let Some(t) = current.as_mut() {
                    t.code = line.trim().parse().ok();
                }
                awaiting_code = false;
            } else if let Some(t) = current.as_mut() {
                t.stdout.push_str(line);
                t.stdout.push('\n');
            }
        }
        out.extend(current);
    }
    out
}
