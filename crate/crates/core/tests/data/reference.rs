// Reference values from scipy 1.15.3 (stats.shapiro, stats.levene with center="mean").

/// name, sample, W, p
pub type ShapiroCase = (&'static str, &'static [f64], f64, f64);
/// name, group a, group b, F, p
pub type LeveneCase = (&'static str, &'static [f64], &'static [f64], f64, f64);

pub const SHAPIRO: &[ShapiroCase] = &[
    ("normal_20", &[47.888, 44.823, 51.496, 32.101, 52.845, 46.783, 42.739, 50.985, 30.485, 48.416, 42.687, 54.097, 54.424, 40.721, 40.668, 35.3, 42.123, 53.194, 58.573, 52.288], 0.9519177534261523, 0.3971419220771929),
    ("uniform_30", &[0.1281, 0.9222, 0.898, 0.3457, 0.8855, 0.2784, 0.6935, 0.0546, 0.3219, 0.295, 0.9231, 0.1473, 0.2209, 0.4673, 0.9906, 0.5463, 0.0591, 0.5017, 0.4917, 0.072, 0.4327, 0.5312, 0.3642, 0.3155, 0.7776, 0.6359, 0.6911, 0.8758, 0.6738, 0.4844], 0.9505628744934145, 0.1750291015939502),
    ("expo_25", &[0.472, 0.3662, 0.1147, 0.1272, 5.2851, 4.6801, 1.5574, 0.9807, 10.0934, 3.0768, 0.4986, 1.7612, 0.2897, 2.4537, 0.5967, 1.6435, 2.5558, 1.2938, 0.2634, 5.0084, 0.7414, 3.3781, 0.5554, 1.6287, 0.8865], 0.7620165512651187, 5.632561422597322e-05),
    ("small_5", &[2.1, 3.4, 1.9, 5.6, 4.4], 0.9320849391953863, 0.6106559022604845),
    ("n3", &[1.0, 2.0, 4.0], 0.9642857142857142, 0.6368868450289689),
    ("normal_200", &[0.60015, -0.48858, 0.62716, -1.2014, 0.72536, -1.26387, 0.37573, -0.21323, -0.50148, 0.15307, -0.57531, -0.77194, 0.39491, 1.93121, -0.99776, 1.15517, 1.08156, -1.12008, 0.19023, 0.52404, -0.91086, 1.07922, 0.87791, 1.69844, 0.38983, 0.94603, 1.81212, 0.20299, -0.50022, -1.45091, 0.28645, -1.26722, 1.09769, 0.14717, 0.81106, 0.16271, 1.23833, -0.45635, 0.05007, 1.40011, -1.25831, 0.19253, 0.97526, -1.06353, -0.69972, -1.24991, 1.18076, -0.18938, -0.31515, -1.41254, -1.06379, 0.92653, -0.18947, -0.40089, 0.7919, -0.90587, 1.61338, -0.36821, -0.51304, -0.26517, 0.03734, 0.70117, -0.69884, -0.82403, 0.03816, 0.33895, 0.87726, -0.47675, 0.96701, -1.01989, 1.38578, -1.09207, -0.08626, 0.19529, 1.01317, 1.46017, 0.04923, 1.89564, -0.81953, 0.32709, -0.2369, 0.57243, -0.95186, -1.09784, 1.28316, 1.06403, 0.56112, -0.70221, 0.59207, 0.44716, 1.23346, 0.23292, -1.61452, -0.21626, -0.02745, 0.79221, -0.24777, -1.05822, 1.15039, 0.3856, -1.09742, -0.66384, 0.91915, -1.34937, 0.96798, 0.02287, -0.15222, 0.86609, -0.42416, 0.05578, 1.635, -0.84487, 1.82169, -1.68612, -0.85645, 0.90092, -0.66284, -0.31834, 0.78958, 0.95781, 0.49003, -0.54134, 0.62827, 0.15386, 1.17918, 0.38987, -0.79593, -0.12539, -1.55232, 0.62926, 0.44704, 0.01877, -1.34558, -0.38893, 0.6822, -0.1843, 0.1201, 1.14518, 0.63348, -1.59874, 0.36664, -0.93586, -2.2249, 1.15997, -1.4856, -0.31554, 1.24897, 0.70302, -0.06205, -0.88786, 0.29612, -0.06827, 0.82141, 0.38825, 0.72912, -1.50362, -0.85906, 0.15971, 0.36888, -0.62425, -0.70182, -0.02708, 0.12492, 1.96402, -0.38395, 0.53746, -1.71283, -0.1004, -0.32124, -1.28844, -0.97061, -0.64534, -0.78195, -1.89787, -0.32371, -0.09893, -0.30615, 0.81434, -0.17104, 0.09928, -0.0359, 0.11689, -1.0597, -0.28704, 1.79206, 0.32637, -0.16389, -0.45006, 0.37837, 0.00567, 0.21631, 0.87516, 0.14439, -0.09012, -0.61374, -1.32587, 0.42674, 0.35813, -0.65984, -0.55862], 0.9919325507181302, 0.3349490683044954),
    ("lognormal_60", &[0.3351, 0.3718, 0.7061, 0.9417, 2.3946, 1.753, 0.5794, 2.2474, 0.1425, 0.675, 1.6204, 4.3672, 0.1931, 0.2988, 0.6071, 0.2078, 0.9537, 1.2965, 0.7641, 0.4132, 6.522, 4.831, 1.3562, 4.3339, 0.4524, 0.2645, 1.2874, 6.0693, 0.7958, 2.1254, 3.5211, 1.0455, 2.3187, 0.5164, 3.6331, 1.5236, 1.0698, 0.5327, 0.0575, 1.3756, 1.003, 0.8903, 0.6722, 6.5836, 0.9169, 0.9216, 0.9966, 0.3423, 0.5848, 0.7087, 1.3727, 1.819, 0.4699, 2.8772, 0.0916, 4.5445, 1.9314, 2.2848, 1.1494, 1.5122], 0.7830663527407483, 5.2333227924445326e-08),
    ("ties_12", &[1.0, 2.0, 2.0, 3.0, 3.0, 3.0, 4.0, 4.0, 5.0, 6.0, 6.0, 7.0], 0.9537077400032378, 0.6916507240483967),
    ("uniform_500", &[0.273112, 0.301407, 0.975264, 0.279209, 0.025263, 0.219266, 0.628705, 0.969412, 0.728430, 0.793952, 0.962016, 0.611914, 0.612142, 0.752739, 0.678242, 0.676744, 0.520474, 0.739225, 0.312031, 0.867295, 0.633274, 0.252836, 0.128050, 0.852824, 0.595362, 0.097002, 0.840152, 0.545044, 0.649738, 0.364809, 0.077573, 0.027660, 0.504648, 0.272926, 0.557911, 0.319734, 0.985360, 0.895289, 0.201639, 0.273380, 0.101332, 0.356198, 0.778414, 0.860414, 0.354358, 0.407516, 0.409960, 0.198291, 0.107517, 0.105817, 0.617243, 0.175928, 0.032428, 0.634806, 0.943969, 0.999856, 0.366895, 0.934658, 0.466361, 0.671821, 0.648734, 0.489415, 0.490220, 0.719587, 0.377291, 0.199311, 0.001801, 0.086987, 0.132095, 0.980333, 0.611478, 0.709194, 0.071040, 0.037534, 0.905638, 0.773781, 0.534325, 0.336251, 0.124091, 0.100606, 0.817734, 0.866105, 0.633042, 0.989938, 0.374579, 0.191630, 0.862439, 0.254329, 0.754604, 0.341761, 0.364227, 0.710670, 0.544966, 0.216517, 0.946636, 0.124828, 0.690364, 0.570262, 0.117023, 0.618759, 0.405168, 0.958698, 0.015227, 0.834282, 0.540562, 0.892700, 0.078078, 0.656574, 0.480142, 0.331756, 0.308971, 0.642174, 0.560532, 0.205658, 0.581354, 0.390615, 0.249201, 0.355576, 0.358420, 0.842626, 0.009841, 0.288115, 0.652022, 0.419532, 0.833117, 0.967238, 0.350311, 0.991490, 0.798484, 0.154049, 0.567026, 0.729327, 0.335364, 0.800255, 0.854608, 0.174117, 0.375560, 0.866705, 0.373167, 0.698378, 0.251379, 0.968638, 0.764934, 0.774681, 0.064881, 0.386925, 0.030807, 0.110346, 0.156266, 0.372987, 0.540393, 0.045365, 0.893556, 0.975232, 0.644202, 0.142552, 0.610369, 0.607328, 0.766982, 0.630793, 0.470683, 0.377188, 0.580047, 0.333014, 0.595350, 0.070728, 0.817450, 0.616857, 0.707772, 0.932629, 0.287903, 0.701811, 0.527426, 0.547640, 0.742901, 0.661523, 0.261547, 0.545288, 0.709578, 0.808879, 0.345619, 0.846997, 0.707736, 0.038443, 0.575239, 0.835244, 0.993720, 0.964627, 0.565986, 0.780269, 0.658093, 0.216576, 0.682182, 0.626156, 0.307106, 0.464251, 0.614699, 0.933125, 0.532770, 0.545943, 0.303402, 0.848080, 0.879455, 0.714101, 0.015850, 0.386052, 0.227015, 0.774633, 0.835979, 0.070373, 0.822781, 0.542549, 0.890300, 0.877361, 0.904821, 0.977795, 0.752347, 0.736210, 0.889473, 0.451502, 0.934840, 0.451623, 0.167160, 0.312688, 0.598374, 0.479570, 0.216413, 0.233372, 0.910262, 0.768952, 0.107129, 0.748050, 0.140700, 0.613863, 0.633314, 0.460379, 0.782257, 0.110566, 0.293636, 0.131122, 0.342958, 0.724877, 0.207868, 0.055323, 0.546144, 0.725455, 0.259971, 0.946058, 0.850615, 0.954387, 0.430928, 0.083927, 0.291120, 0.500123, 0.221831, 0.194093, 0.046388, 0.538031, 0.806419, 0.146346, 0.085658, 0.870598, 0.730979, 0.328557, 0.801060, 0.014151, 0.269964, 0.527023, 0.029751, 0.562699, 0.195929, 0.561184, 0.521222, 0.787505, 0.156893, 0.231405, 0.468427, 0.920719, 0.463244, 0.315446, 0.906436, 0.647550, 0.704069, 0.364218, 0.281822, 0.342532, 0.082215, 0.398557, 0.309335, 0.575935, 0.996874, 0.086405, 0.184451, 0.973061, 0.479372, 0.855303, 0.738824, 0.035822, 0.548219, 0.525073, 0.812267, 0.910658, 0.383902, 0.085681, 0.766267, 0.259552, 0.692234, 0.889776, 0.062633, 0.957344, 0.399282, 0.069290, 0.753623, 0.948630, 0.390493, 0.319490, 0.675356, 0.840070, 0.635158, 0.168254, 0.303686, 0.094377, 0.861747, 0.986533, 0.452328, 0.866592, 0.264699, 0.935508, 0.879103, 0.099049, 0.890529, 0.898133, 0.758669, 0.287614, 0.636085, 0.411335, 0.968979, 0.259723, 0.278392, 0.522680, 0.132582, 0.112628, 0.192827, 0.786466, 0.114911, 0.821015, 0.859560, 0.981339, 0.337852, 0.294069, 0.143788, 0.398257, 0.031096, 0.897900, 0.351502, 0.170575, 0.719489, 0.874287, 0.558109, 0.555324, 0.450110, 0.484392, 0.075251, 0.995337, 0.938808, 0.517028, 0.343960, 0.471055, 0.201090, 0.964359, 0.200145, 0.571303, 0.122387, 0.238156, 0.915949, 0.840045, 0.486523, 0.020612, 0.108903, 0.719349, 0.939916, 0.594468, 0.366426, 0.912950, 0.488915, 0.181184, 0.246849, 0.859427, 0.663524, 0.804811, 0.953918, 0.111856, 0.400857, 0.575128, 0.964931, 0.182249, 0.741310, 0.332731, 0.447384, 0.504329, 0.746157, 0.704723, 0.908567, 0.097976, 0.985032, 0.969214, 0.445569, 0.098519, 0.805699, 0.680038, 0.651292, 0.290239, 0.239668, 0.061971, 0.188912, 0.266776, 0.207620, 0.028758, 0.823641, 0.455037, 0.750507, 0.149565, 0.636846, 0.145289, 0.174407, 0.855675, 0.408840, 0.351192, 0.494265, 0.625964, 0.258400, 0.520604, 0.823162, 0.966996, 0.793898, 0.945609, 0.872148, 0.927825, 0.638924, 0.917340, 0.926526, 0.980455, 0.947280, 0.536296, 0.444188, 0.060623, 0.204534, 0.569333, 0.795649, 0.805289, 0.269849, 0.222178, 0.032173, 0.361462, 0.538992, 0.716081, 0.199224, 0.248526, 0.977097, 0.073730, 0.987173, 0.194973, 0.901611, 0.800715, 0.770088, 0.812307, 0.803725, 0.457841, 0.603701, 0.935479, 0.777488, 0.098471, 0.233265, 0.298235, 0.560048, 0.801981, 0.712073, 0.653073, 0.479105, 0.484132, 0.372902, 0.542402, 0.850558, 0.428908, 0.266979, 0.354301, 0.280314, 0.476044, 0.448527, 0.921455, 0.207192, 0.640003, 0.662396, 0.704113, 0.168228, 0.546249, 0.975151, 0.214283, 0.578077, 0.079923], 0.9477859350786214, 2.8071483029023324e-12),
];

pub const LEVENE: &[LeveneCase] = &[
    ("l1", &[1.0, 2.0, 3.0, 4.0], &[-10.0, 0.0, 10.0, 20.0], 9.623762376237623, 0.021056767112156507),
    ("l2", &[47.888, 44.823, 51.496, 32.101, 52.845, 46.783, 42.739, 50.985, 30.485, 48.416], &[42.687, 54.097, 54.424, 40.721, 40.668, 35.3, 42.123, 53.194, 58.573, 52.288], 0.5437931824474189, 0.4703693637003503),
    ("l3", &[0.1281, 0.9222, 0.898, 0.3457, 0.8855, 0.2784, 0.6935, 0.0546, 0.3219, 0.295, 0.9231, 0.1473], &[0.472, 0.3662, 0.1147, 0.1272, 5.2851, 4.6801, 1.5574, 0.9807, 10.0934], 20.295963332712166, 0.00024236124733334485),
    ("l4", &[2.1, 3.4, 1.9, 5.6, 4.4], &[10.0, 12.0, 9.0, 30.0, 1.0, 4.0], 2.8973951227475228, 0.1229291402797888),
    ("l5", &[0.3351, 0.3718, 0.7061, 0.9417, 2.3946, 1.753, 0.5794, 2.2474, 0.1425, 0.675, 1.6204, 4.3672, 0.1931, 0.2988, 0.6071, 0.2078, 0.9537, 1.2965, 0.7641, 0.4132, 6.522, 4.831, 1.3562, 4.3339, 0.4524, 0.2645, 1.2874, 6.0693, 0.7958, 2.1254], &[3.5211, 1.0455, 2.3187, 0.5164, 3.6331, 1.5236, 1.0698, 0.5327, 0.0575, 1.3756, 1.003, 0.8903, 0.6722, 6.5836, 0.9169, 0.9216, 0.9966, 0.3423, 0.5848, 0.7087, 1.3727, 1.819, 0.4699, 2.8772, 0.0916, 4.5445, 1.9314, 2.2848, 1.1494, 1.5122], 1.2288339221409033, 0.2722095526534091),
    ("l6", &[5.0, 5.1, 4.9, 5.05], &[1.0, 9.0, 3.0, 7.0, 5.0], 7.584526244035446, 0.028339960412726052),
];
