def pytest_report_header(config):
    from forceps import KERNEL_BACKEND

    return f"forceps kernel backend: {KERNEL_BACKEND}"
