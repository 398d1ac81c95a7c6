import hypothesis

hypothesis.settings.register_profile(
    "repro", derandomize=True, max_examples=120)
hypothesis.settings.load_profile("repro")
