class BudgetExceeded(RuntimeError):
    """A computation would exceed its configured work budget."""

    def __init__(self, what: str, needed: int, budget: int):
        self.what = what
        self.needed = needed
        self.budget = budget
        super().__init__(f"budget exceeded: {what} needs {needed} steps, budget is {budget}")
