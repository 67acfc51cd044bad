import os

directory = os.path.dirname(os.path.realpath(__file__))

fixtures_directory = os.path.join(
    os.path.dirname(os.path.dirname(directory)), 'fixtures')


def fixture_path(file_name):
    return os.path.join(fixtures_directory, file_name)


downup_2_1_path = fixture_path('downup_2_-1.alg')
downup_4_4_path = fixture_path('downup_4_-4.alg')
d_2_1_path = fixture_path('d_2_1.alg')
quantum_plane_path = fixture_path('quantum_plane_2.alg')
commutative_plane_path = fixture_path('commutative_plane.alg')
free_path = fixture_path('free_2.alg')
skew_3_path = fixture_path('skew_3_2.alg')
generic_plane_path = fixture_path('generic_plane.alg')

heisenberg_1_path = fixture_path('heisenberg_1.cl')
heisenberg_2_path = fixture_path('heisenberg_2.cl')
heisenberg_1_3_path = fixture_path('heisenberg_1_3.cl')
abelian_2_path = fixture_path('abelian_2.cl')
abelian_3_path = fixture_path('abelian_3_2.cl')
bad_jacobi_path = fixture_path('bad_jacobi.cl')
heisenberg_corrupt_path = fixture_path('heisenberg_corrupt.cl')

algebra_fixtures = [
    downup_2_1_path, downup_4_4_path, d_2_1_path, quantum_plane_path,
    commutative_plane_path, free_path, skew_3_path, generic_plane_path]

color_lie_fixtures = [
    heisenberg_1_path, heisenberg_2_path, heisenberg_1_3_path,
    abelian_2_path, abelian_3_path, bad_jacobi_path,
    heisenberg_corrupt_path]
