from __future__ import annotations

from docquiz.ingest import strip_boilerplate

from conftest import make_document


def test_single_page_passes_through():
    doc = make_document([["Header", "body", "Page 1 of 1"]])
    assert strip_boilerplate(doc) == doc


def test_page_number_footers_removed():
    letters = "abcde"
    pages = [
        [f"Heading {letters[i]}", f"body text {letters[i]} one",
         f"more body {letters[i]} two", f"Page {i + 1} of 5"]
        for i in range(5)
    ]
    out = strip_boilerplate(make_document(pages))
    for i, page in enumerate(out.pages):
        assert all("Page" not in line for line in page.lines)
        assert f"body text {letters[i]} one" in page.lines
        assert f"more body {letters[i]} two" in page.lines


def test_mid_page_repetition_retained():
    quote = "Quality is never an accident."
    pages = [
        ["top line %d" % i, "alpha", quote, "omega", "bottom line %d" % i]
        for i in range(5)
    ]
    out = strip_boilerplate(make_document(pages))
    for page in out.pages:
        assert quote in page.lines


def test_recurring_header_with_digits_masked():
    # "DOC-42 rev 1" vs "DOC-42 rev 2": identical after digit masking.
    letters = "abcd"
    pages = [
        [f"DOC-42 rev {i}", f"unique body {letters[i]} one", f"unique body {letters[i]} two"]
        for i in range(4)
    ]
    out = strip_boilerplate(make_document(pages))
    for i, page in enumerate(out.pages):
        assert list(page.lines) == [
            f"unique body {letters[i]} one",
            f"unique body {letters[i]} two",
        ]


def test_sixty_percent_threshold_boundary():
    # Footer on 3 of 5 pages: exactly 60%, removed.
    pages = [["body %d" % i, "extra %d" % i] for i in range(5)]
    for i in range(3):
        pages[i].append("Company confidential")
    out = strip_boilerplate(make_document(pages))
    assert all("Company confidential" not in p.lines for p in out.pages)

    # Footer on 2 of 5 pages: 40%, retained.
    pages = [["body %d" % i, "extra %d" % i] for i in range(5)]
    for i in range(2):
        pages[i].append("Company confidential")
    out = strip_boilerplate(make_document(pages))
    assert sum("Company confidential" in p.lines for p in out.pages) == 2


def test_non_band_lines_never_removed():
    # Same text repeated at line index 2 of 6-line pages: outside both bands.
    pages = [
        ["h %d" % i, "a %d" % i, "repeated middle", "b %d" % i, "c %d" % i, "f %d" % i]
        for i in range(5)
    ]
    out = strip_boilerplate(make_document(pages))
    assert all("repeated middle" in p.lines for p in out.pages)
