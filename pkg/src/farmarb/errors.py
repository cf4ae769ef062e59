class FarmError(Exception):
    pass


class NonConformingError(FarmError):
    """A checked claim about the economy was falsified.

    ``evidence`` carries whatever counterexample the check produced.
    """

    def __init__(self, message, evidence=None):
        super().__init__(message)
        self.evidence = evidence


class BudgetExceededError(FarmError):
    pass
