"""
PCG32 (PCG-XSH-RR 64/32) 난수 생성기

언어/플랫폼에 관계없이 같은 seed => 같은 격자를 재현하기 위해 직접 구현
참고: pcg-random.org 의 minimal C 구현 (pcg32_srandom_r, pcg32_random_r)
"""

MASK64 = 0xFFFF_FFFF_FFFF_FFFF
MASK32 = 0xFFFF_FFFF
MULTIPLIER = 6364136223846793005


class PCG32:
    def __init__(self, seed: int, stream: int = 0):
        if not (0 <= seed <= MASK64):
            raise ValueError(f"seed는 64bit unsigned 범위여야 합니다: {seed}")
        if not (0 <= stream <= MASK64):
            raise ValueError(f"stream은 64bit unsigned 범위여야 합니다: {stream}")

        # pcg32_srandom_r
        self.state = 0
        # stream 선택, 항상 홀수
        self.inc = ((stream << 1) & MASK64) | 1
        self.next_uint32()
        self.state = (self.state + seed) & MASK64
        self.next_uint32()

    def next_uint32(self) -> int:
        """[0, 2^32) 정수"""
        old = self.state
        self.state = (old * MULTIPLIER + self.inc) & MASK64
        # XSH RR 출력 함수 (이전 state 사용)
        xorshifted = (((old >> 18) ^ old) >> 27) & MASK32
        rot = old >> 59
        return ((xorshifted >> rot) | (xorshifted << ((-rot) & 31))) & MASK32

    def next_double(self) -> float:
        """[0, 1) 실수, 32bit 출력 2개로 53bit 가수 구성"""
        hi = self.next_uint32() >> 5  # 27 bit
        lo = self.next_uint32() >> 6  # 26 bit
        return (hi * 67108864.0 + lo) / 9007199254740992.0

    def uniform(self, a: float, b: float) -> float:
        return a + (b - a) * self.next_double()
