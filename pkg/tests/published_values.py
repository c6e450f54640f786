"""Published Heart attack results used as regression fixtures.

Fitted matrices are lower triangles including the diagonal, rows and columns
in the order CI, SI, VP, Pulse, logPR, DBP, PA.
"""
import numpy as np

LABELS = ("CI", "SI", "VP", "Pulse", "logPR", "DBP", "PA")


def _lower(rows):
    p = len(rows)
    M = np.zeros((p, p))
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            M[i, j] = M[j, i] = v
    return M


FITTED = {
    "pca": _lower([
        [0.929],
        [0.818, 0.814],
        [-0.492, -0.416, 0.264],
        [-0.054, -0.264, -0.013, 0.504],
        [-0.823, -0.867, 0.409, 0.377, 0.946],
        [-0.405, -0.609, 0.166, 0.609, 0.744, 0.861],
        [-0.323, -0.544, 0.121, 0.620, 0.682, 0.844, 0.834],
    ]),
    "pca-cos": _lower([
        [1.000],
        [0.941, 1.000],
        [-0.994, -0.896, 1.000],
        [-0.079, -0.412, -0.035, 1.000],
        [-0.878, -0.988, 0.818, 0.546, 1.000],
        [-0.453, -0.728, 0.348, 0.925, 0.824, 1.000],
        [-0.367, -0.660, 0.258, 0.956, 0.767, 0.996, 1.000],
    ]),
    "crg": _lower([
        [1.000],
        [0.917, 1.000],
        [-0.863, -0.589, 1.000],
        [0.016, -0.384, -0.519, 1.000],
        [-0.903, -0.999, 0.561, 0.416, 1.000],
        [-0.589, -0.862, 0.099, 0.799, 0.879, 1.000],
        [-0.498, -0.803, -0.009, 0.859, 0.823, 0.994, 1.000],
    ]),
    "mds": _lower([
        [1.000],
        [0.941, 1.000],
        [-0.173, 0.023, 1.000],
        [0.044, -0.259, -0.071, 1.000],
        [-0.732, -0.797, 0.575, 0.529, 1.000],
        [-0.294, -0.405, 0.565, 0.756, 0.957, 1.000],
        [-0.188, -0.303, 0.572, 0.788, 0.936, 0.998, 1.000],
    ]),
    "pfa": _lower([
        [1.002],
        [0.893, 0.845],
        [-0.240, -0.252, 0.087],
        [-0.221, -0.272, 0.111, 0.161],
        [-0.823, -0.850, 0.287, 0.355, 0.947],
        [-0.347, -0.514, 0.240, 0.381, 0.759, 0.950],
        [-0.259, -0.439, 0.222, 0.368, 0.696, 0.936, 0.930],
    ]),
    "wals": _lower([
        [1.012],
        [0.894, 0.841],
        [-0.241, -0.252, 0.087],
        [-0.220, -0.271, 0.111, 0.161],
        [-0.825, -0.848, 0.287, 0.355, 0.946],
        [-0.347, -0.514, 0.240, 0.382, 0.759, 0.950],
        [-0.258, -0.440, 0.222, 0.368, 0.696, 0.936, 0.929],
    ]),
    "wals-adj": _lower([
        [1.408],
        [0.889, 0.558],
        [-0.237, -0.330, -0.015],
        [-0.229, -0.340, 0.030, 0.084],
        [-0.843, -0.823, 0.199, 0.282, 0.833],
        [-0.336, -0.497, 0.283, 0.382, 0.801, 0.943],
        [-0.247, -0.430, 0.267, 0.363, 0.736, 0.900, 0.863],
    ]),
}

RMSE_OFFDIAG = {
    "pca": 0.1315,
    "pca-cos": 0.3181,
    "crg": 0.2885,
    "mds": 0.2063,
    "pfa": 0.0755,
    "wals": 0.075519,
    "wals-adj": 0.0662,
}

# fitted correlations of SI with the other variables
SI_ROW = {
    "pca": {"Pulse": -0.264, "CI": 0.818, "SI": 0.814, "DBP": -0.609, "PA": -0.544, "VP": -0.416, "logPR": -0.867},
    "pca-adj": {"Pulse": -0.316, "CI": 0.905, "SI": 1.017, "DBP": -0.597, "PA": -0.546, "VP": -0.092, "logPR": -0.717},
    "wals": {"Pulse": -0.271, "CI": 0.894, "SI": 0.842, "DBP": -0.514, "PA": -0.440, "VP": -0.252, "logPR": -0.848},
    "wals-adj": {"Pulse": -0.340, "CI": 0.889, "SI": 0.557, "DBP": -0.497, "PA": -0.430, "VP": -0.330, "logPR": -0.823},
}
SI_RMSE = {"pca": 0.160, "pca-adj": 0.116, "wals": 0.099, "wals-adj": 0.086}

# per-variable RMSE; PCA columns include the diagonal, WALS columns do not
PER_VARIABLE_RMSE = {
    "pca": {"Pulse": 0.2469, "CI": 0.0945, "SI": 0.1598, "DBP": 0.1212, "PA": 0.1390, "VP": 0.3103, "logPR": 0.0564},
    "pca-adj": {"Pulse": 0.1618, "CI": 0.1078, "SI": 0.1158, "DBP": 0.1540, "PA": 0.1828, "VP": 0.1336, "logPR": 0.1275},
    "wals": {"Pulse": 0.1345, "CI": 0.0482, "SI": 0.0988, "DBP": 0.0242, "PA": 0.0196, "VP": 0.0877, "logPR": 0.0329},
    "wals-adj": {"Pulse": 0.0948, "CI": 0.0530, "SI": 0.0857, "DBP": 0.0239, "PA": 0.0218, "VP": 0.0883, "logPR": 0.0521},
}
OVERALL_RMSE = {"pca": 0.1808, "pca-adj": 0.1426, "wals": 0.0755, "wals-adj": 0.0662}
INCLUDE_DIAG_BY_METHOD = {"pca": True, "pca-adj": True, "wals": False, "wals-adj": False}
