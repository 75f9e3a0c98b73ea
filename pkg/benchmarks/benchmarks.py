# Write the benchmarking functions here.
# See "Writing benchmarks" in the asv docs for more information.
import anisobolev as ab


class TimeSuite:
    def setup(self):
        self.quadratic = ab.MonomialWeight((2.0,))
        self.plane = ab.MonomialWeight((1.0, 0.0))
        self.cone = ab.Cone(n=1)
        self.bump = ab.TensorBump(n=2)
        self.profile = ab.rearrange(self.quadratic, self.cone)

    def time_rearrange_1d(self):
        ab.rearrange(self.quadratic, self.cone)

    def time_rearrange_2d(self):
        ab.rearrange(self.plane, self.bump, resolution=256)

    def time_double_star(self):
        self.profile.double_star()

    def time_lorentz_norm(self):
        ab.parse_space("lorentz:p=2,q=1").norm(self.profile)

    def time_t32_chain(self):
        for case_id in ("T32.i", "T32.ii", "T32.iii", "T32.v"):
            ab.verify_case(case_id, self.cone, self.quadratic, resolution=2000)

    def time_sobolev_2d(self):
        ab.verify_case("P44.i", self.bump, self.plane, resolution=128,
                       p_vec=(1.0, 1.0))


class MemSuite:
    def setup(self):
        self.plane = ab.MonomialWeight((1.0, 0.0))
        self.bump = ab.TensorBump(n=2)

    def peakmem_rearrange_2d(self):
        ab.rearrange(self.plane, self.bump, resolution=256)

    def peakmem_sobolev_terms(self):
        ab.sobolev_terms(self.bump, self.plane, resolution=128)
