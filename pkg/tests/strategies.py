from hypothesis import strategies as st

# bsx text built as a nested list of lists
bsx_text = st.recursive(
    st.just("()"),
    lambda inner: st.lists(inner, max_size=4).map(lambda xs: "(" + "".join(xs) + ")"),
    max_leaves=30,
)
