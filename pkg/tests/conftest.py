from hypothesis import settings

# wall-clock deadlines turn machine load spikes into spurious failures;
# example counts are budgeted per test instead
settings.register_profile("suite", deadline=None)
settings.load_profile("suite")
