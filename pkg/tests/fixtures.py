"""Shared Arabic text fixtures.

Every faulty draft is derived from a clean base text by replacing token
spans, so expected flag positions and counts stay in sync with the text.
All vocabulary comes from the packaged seed lexicon; every perturbed
surface is absent from it.
"""

from __future__ import annotations

from kateb.textcore import Token, tokenize


def token_index(text: str, surface: str, occurrence: int = 0) -> int:
    hits = [i for i, t in enumerate(tokenize(text)) if t.surface == surface]
    return hits[occurrence]


def replace_spans(text: str, spans: list[tuple[int, int, str]]) -> str:
    """Replace inclusive token-index spans, rightmost first."""
    toks: list[Token] = tokenize(text)
    out = text
    for i0, i1, rep in sorted(spans, reverse=True):
        out = out[: toks[i0].start] + rep + out[toks[i1].end :]
    return out


def perturb(text: str, changes: list[tuple[str, int, str]]) -> str:
    """Apply single-token replacements given as (surface, occurrence, new)."""
    spans = []
    for surface, occ, rep in changes:
        idx = token_index(text, surface, occ)
        spans.append((idx, idx, rep))
    return replace_spans(text, spans)


# ---------------------------------------------------------------------------
# Hobby essay used across scoring and service tests: a draft riddled with
# spelling errors and the near-clean rewrite of the same 118-word text.

ESSAY_CLEAN = (
    "هوايتي المفضلة هي القراءة في أوقات الفراغ. "
    "أقرأ الكتب في المساء بعد العمل أو في نهاية الأسبوع. "
    "أحب قراءة القصص القصيرة الجميلة في أوقات الفراغ. "
    "أشارك في نقاش حول الكتب مع أصدقائي في المكتبة القريبة من البيت. "
    "أما في الرياضة فأحب السباحة لأنها تمنحني الشعور بالراحة والنشاط. "
    "أمارس السباحة مرة أو مرتين في الأسبوع مع صديقي في النادي. "
    "وفي نهاية الأسبوع أحب المشي في الحديقة واستكشاف أماكن جديدة في المدينة. "
    "في المساء أجلس على كرسي مريح بجانب النافذة وأقرأ ساعة طويلة. "
    "أجد في هذه الأنشطة فرصة جميلة للراحة قبل بداية أسبوع جديد من العمل. "
    "وأحيانا أقضي الوقت مع عائلتي أو مع أصدقائي في البيت حول مائدة الطعام. "
    "وفي العطلة نذهب معا إلى السوق القريب ونشتري الفواكه الطازجة قبل نهاية المساء."
)

# 16 single-token misspellings: wrong hamza seats, final-taa swaps, one
# alif-maqsura swap.
_ESSAY_SINGLE_ERRORS = [
    ("أقرأ", 0, "اقرأ"),
    ("الأسبوع", 0, "الاسبوع"),
    ("أحب", 0, "احب"),
    ("أصدقائي", 0, "اصدقائي"),
    ("أما", 0, "اما"),
    ("أمارس", 0, "امارس"),
    ("أماكن", 0, "اماكن"),
    ("أجلس", 0, "اجلس"),
    ("إلى", 0, "الى"),
    ("القراءة", 0, "القراءه"),
    ("السباحة", 0, "السباحه"),
    ("مرة", 0, "مره"),
    ("الجميلة", 0, "الجميله"),
    ("ساعة", 0, "ساعه"),
    ("على", 0, "علي"),
]


def _essay_draft() -> str:
    text = ESSAY_CLEAN
    toks = tokenize(text)
    # run-on: drop the space inside the second {في البيت}
    bayt = token_index(text, "البيت", 1)
    # split: break المدينة into two fragments
    madina = token_index(text, "المدينة")
    spans = [(bayt - 1, bayt, "فيالبيت"), (madina, madina, "المدي نة")]
    for surface, occ, rep in _ESSAY_SINGLE_ERRORS:
        idx = token_index(text, surface, occ)
        spans.append((idx, idx, rep))
    assert toks is not None
    return replace_spans(text, spans)


ESSAY_DRAFT = _essay_draft()
# 15 misspelled tokens + 1 run-on token + 2 split fragments
ESSAY_DRAFT_ERRORS = 18

# the rewrite fixes everything except one final-taa slip
ESSAY_REPAIRED = perturb(ESSAY_CLEAN, [("مرة", 0, "مره")])
ESSAY_REPAIRED_ERRORS = 1


# ---------------------------------------------------------------------------
# Corpus selection fixture: three users plus the improvement-case
# participant whose error count rose while the estimated level rose too.

_BASE_B = (
    "أحب القراءة في المساء بعد العمل. "
    "أقرأ الكتب في البيت مع أصدقائي. "
    "أمارس السباحة مرة أو مرتين في الأسبوع. "
    "أشارك في نقاش حول الكتب في المكتبة القريبة. "
    "أجلس على كرسي مريح بجانب النافذة. "
    "أجد في هذه الأنشطة فرصة جميلة للراحة قبل بداية أسبوع جديد. "
    "وأحيانا أقضي الوقت مع عائلتي حول مائدة الطعام في نهاية الأسبوع."
)

_B_ERRORS = [
    ("أحب", 0, "احب"),
    ("أقرأ", 0, "اقرأ"),
    ("أمارس", 0, "امارس"),
    ("أشارك", 0, "اشارك"),
    ("أجلس", 0, "اجلس"),
    ("أجد", 0, "اجد"),
    ("أقضي", 0, "اقضي"),
    ("وأحيانا", 0, "واحيانا"),
    ("أصدقائي", 0, "اصدقائي"),
    ("القراءة", 0, "القراءه"),
]

# user A: one revision only, never exported
USER_A_REVISIONS = [_BASE_B]

# user B: three revisions, error count strictly falling (10, 7, 5)
USER_B_REVISIONS = [
    perturb(_BASE_B, _B_ERRORS[:10]),
    perturb(_BASE_B, _B_ERRORS[:7]),
    perturb(_BASE_B, _B_ERRORS[:5]),
]
USER_B_ERROR_COUNTS = [10, 7, 5]

# user C: resubmitted the same faulty text, no improvement
USER_C_REVISIONS = [perturb(_BASE_B, _B_ERRORS[:4])] * 2
USER_C_ERROR_COUNTS = [4, 4]

# user D first draft: very short repetitive sentences
_D_DRAFT_CLEAN = (
    "أحب القراءة كثيرا. أقرأ الكتب دائما. أقرأ في البيت. "
    "الكتب جميلة جدا. أحب السباحة أيضا. أمارس السباحة دائما. "
    "أذهب إلى النادي. النادي قريب جدا. أحب المشي أيضا. "
    "أمشي في الحديقة. الحديقة جميلة جدا. أحب عائلتي كثيرا. "
    "آكل مع عائلتي. نأكل في البيت. الطعام لذيذ جدا. "
    "أحب أصدقائي أيضا. ألعب مع أصدقائي. نلعب في الحديقة. "
    "أحب المكتبة كثيرا. أذهب إلى المكتبة. المكتبة قريبة جدا. "
    "أقرأ القصص دائما. القصص جميلة جدا. أحب المساء كثيرا. "
    "أجلس في البيت. أشرب الشاي دائما. الشاي لذيذ جدا. "
    "أحب العطلة أيضا. نذهب إلى السوق. السوق قريب جدا. "
    "نشتري الخبز دائما. الخبز لذيذ جدا. أحب الرياضة كثيرا. "
    "أمارس الرياضة دائما. الرياضة جميلة جدا. أحب الحياة هنا. "
    "الحياة جميلة جدا."
)

# user D final draft: longer varied sentences, one extra slip crept in
_D_FINAL_CLEAN = (
    "أحب القراءة والرياضة كثيرا في حياتي اليومية. "
    "أقرأ الكتب والقصص الجميلة في المساء بعد العمل. "
    "أذهب إلى المكتبة القريبة وأجلس هناك ساعة طويلة. "
    "أمارس السباحة مع أصدقائي في النادي كل أسبوع. "
    "نلعب في الحديقة ونمشي بجانب النهر في العطلة. "
    "آكل مع عائلتي حول مائدة الطعام في البيت. "
    "نشتري الخبز والفواكه الطازجة من السوق القريب. "
    "أشرب الشاي في المساء وأكتب عن يومي الجميل. "
    "أجد في هذه الأنشطة فرصة جميلة للراحة والنشاط. "
    "أحب الحياة الجميلة هنا مع عائلتي وأصدقائي الأعزاء. "
    "وفي نهاية الأسبوع نذهب معا إلى الحديقة الكبيرة. "
    "نجلس تحت الشجرة العالية ونتكلم عن أيام الأسبوع الجميلة. "
    "في الصباح أشرب القهوة وأقرأ قبل بداية العمل الطويل. "
    "هذه هي هواياتي المفضلة في كل أيام الأسبوع."
)

USER_D_REVISIONS = [
    perturb(_D_DRAFT_CLEAN, [
        ("أحب", 0, "احب"),
        ("أقرأ", 0, "اقرأ"),
        ("أذهب", 0, "اذهب"),
    ]),
    perturb(_D_FINAL_CLEAN, [
        ("أحب", 0, "احب"),
        ("المكتبة", 0, "المكتبه"),
        ("عائلتي", 0, "عائلتى"),
        ("الأسبوع", 0, "الاسبوع"),
    ]),
]
USER_D_ERROR_COUNTS = [3, 4]
