from .layers import (
    BiLSTM,
    Conv1D,
    Dense,
    Dropout,
    EmbeddingLookup,
    Flatten,
    Layer,
    Parallel,
    Parameter,
    ReLU,
    Sequential,
    Softmax,
    iter_layers,
)
from .losses import weighted_cross_entropy, weighted_cross_entropy_grad
from .optim import Adam, zero_grads
from .gradcheck import GradCheckReport, grad_check

__all__ = [
    "Adam",
    "BiLSTM",
    "Conv1D",
    "Dense",
    "Dropout",
    "EmbeddingLookup",
    "Flatten",
    "GradCheckReport",
    "Layer",
    "Parallel",
    "Parameter",
    "ReLU",
    "Sequential",
    "Softmax",
    "grad_check",
    "iter_layers",
    "weighted_cross_entropy",
    "weighted_cross_entropy_grad",
    "zero_grads",
]
