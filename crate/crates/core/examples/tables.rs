//! Regenerates the reference tables as Markdown.

fn main() -> orientable::Result<()> {
    print!("{}", orientable::tables::render_markdown()?);
    Ok(())
}
