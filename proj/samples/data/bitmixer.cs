class BitMixer
{
    static uint Scramble(uint seed)
    {
        uint h = seed;
        h ^= h >> 13;
        h *= 2654435761;
        h ^= h << 7;
        h |= 1;
        return h;
    }
}
