using System;

class Checkout
{
    static int Total(int[] prices, int count)
    {
        int total = 0;
        for (int i = 0; i < count; i++)
        {
            total += prices[i];
        }
        if (total > 100)
        {
            total -= total / 10; // bulk discount
        }
        return total;
    }
}
